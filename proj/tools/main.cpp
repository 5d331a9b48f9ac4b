#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewpencil/decompose.hpp"
#include "skewpencil/errors.hpp"
#include "skewpencil/generate.hpp"
#include "skewpencil/invariants.hpp"
#include "skewpencil/io.hpp"

using namespace skewpencil;
using ojson = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 parse or validation error, 2 split failure,
// 3 verification failure, 4 not enough sample points, 5 roundtrip mismatch.
int diag(const std::string& kind, const std::string& detail) {
    std::cerr << ojson{{"kind", kind}, {"detail", detail}}.dump() << "\n";
    if (kind == "SplitFailure") return 2;
    if (kind == "NotEnoughSamplePoints") return 4;
    return 1;
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) fail("Parse", "cannot open '" + path + "'");
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) fail("Parse", "cannot open '" + path + "' for writing");
    f << text;
}

std::uint64_t parse_seed(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("seed must be a nonnegative integer or 'identity'", 0, 0);
    return std::stoull(s);
}

InstanceSpec build_spec(const std::string& field_s, const std::string& blocks_s,
                        const std::string& seed_s, long bound) {
    FieldDescriptor f = parse_field_text(field_s);
    InstanceSpec spec{f, parse_block_specs(f, blocks_s), 0, false, bound};
    if (seed_s == "identity")
        spec.identity_transform = true;
    else
        spec.transform_seed = parse_seed(seed_s);
    return spec;
}

int run_decompose(const std::string& in_path, const std::string& out_path,
                  const std::string& ordering_s, bool want_trace) {
    PencilFile pf = parse_pencil_file(read_input(in_path));
    BasisOrdering ord = ordering_s == "interleaved" ? BasisOrdering::Interleaved
                                                    : BasisOrdering::Split;
    try {
        DecomposeResult res = decompose(pf.A, pf.B);
        VerifyReport rep = verify(pf.A, pf.B, res.decomposition, BasisOrdering::Split);
        write_output(out_path, serialize_result(res.decomposition, rep.ok, ord,
                                                want_trace ? &res.traces : nullptr));
        if (!rep.ok) return diag("VerificationFailed", rep.failures.front()), 3;
        return 0;
    } catch (const SplitFailureError& e) {
        write_output(out_path, serialize_split_failure(e));
        return diag("SplitFailure", e.detail());
    }
}

int run_verify(const std::string& pencil_path, const std::string& result_path) {
    PencilFile pf = parse_pencil_file(read_input(pencil_path));
    ParsedResult pr = parse_result_file(read_input(result_path));
    VerifyReport rep = verify(pf.A, pf.B, pr.decomposition, pr.ordering);
    ojson out;
    out["verify"] = ojson{{"ok", rep.ok}, {"failures", rep.failures}};
    bool ok = rep.ok;
    try {
        Pencil p = validate_pencil(pf.A, pf.B);
        CrossCheckReport cc = cross_check(p, pr.decomposition);
        out["cross_check"] = ojson{{"ok", cc.ok},
                                   {"failures", cc.failures},
                                   {"skipped", cc.skipped}};
        ok = ok && cc.ok;
    } catch (const Error&) {
        // the pencil itself is invalid; verify already reported it
    }
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 3;
}

int run_invariants(const std::string& in_path) {
    PencilFile pf = parse_pencil_file(read_input(in_path));
    Pencil p = validate_pencil(pf.A, pf.B);
    Poly det = det_pencil(p);  // NotEnoughSamplePoints propagates (exit 4)
    ojson out;
    out["field"] = pf.field.is_rationals() ? ojson("Q") : ojson{{"Fp", pf.field.prime()}};
    out["n"] = p.n;
    out["det"] = det.str();
    ojson coeffs = ojson::array();
    for (const auto& c : det.coeffs()) coeffs.push_back(c.str());
    out["det_coeffs"] = std::move(coeffs);
    out["generic_corank"] = generic_corank(p);
    out["corank_A"] = p.n - rank_of(p.A);
    out["corank_B"] = p.n - rank_of(p.B);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_generate(const InstanceSpec& spec, const std::string& out_path) {
    GeneratedInstance gi = generate(spec);
    write_output(out_path, serialize_pencil_file(
                               PencilFile{spec.field, gi.pencil.A, gi.pencil.B},
                               &gi.blocks));
    return 0;
}

int run_roundtrip(const InstanceSpec& spec) {
    GeneratedInstance gi = generate(spec);
    DecomposeResult res = decompose(gi.pencil.A, gi.pencil.B);
    VerifyReport rep = verify(gi.pencil.A, gi.pencil.B, res.decomposition,
                              BasisOrdering::Split);
    bool match = res.decomposition.blocks == gi.blocks;
    ojson out;
    out["blocks_expected"] = format_block_specs(gi.blocks);
    out["blocks_found"] = format_block_specs(res.decomposition.blocks);
    out["match"] = match;
    out["verified"] = rep.ok;
    std::cout << out.dump(2) << "\n";
    return match && rep.ok ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical decomposition of pairs of skew-symmetric forms over Q and F_p"};
    app.require_subcommand(1);

    std::string in_path = "-", out_path, ordering_s = "split";
    bool want_trace = false;
    auto* dec = app.add_subcommand("decompose", "compute the canonical block decomposition");
    dec->add_option("--in", in_path, "pencil JSON file, '-' for stdin");
    dec->add_option("--out", out_path, "output file, stdout by default");
    dec->add_option("--ordering", ordering_s, "basis layout of the result")
        ->check(CLI::IsMember({"split", "interleaved"}));
    dec->add_flag("--trace", want_trace, "include the extraction trace");

    std::string pencil_path, result_path;
    auto* ver = app.add_subcommand("verify", "check a result file against its pencil");
    ver->add_option("--pencil", pencil_path, "pencil JSON file")->required();
    ver->add_option("--result", result_path, "result JSON file")->required();

    std::string inv_in = "-";
    auto* inv = app.add_subcommand("invariants", "rank and determinant invariants");
    inv->add_option("--in", inv_in, "pencil JSON file, '-' for stdin");

    std::string gen_field = "Q", gen_blocks, gen_seed = "0", gen_out;
    long gen_bound = 3;
    auto* gen = app.add_subcommand("generate", "emit a seeded instance with known blocks");
    gen->add_option("--field", gen_field, "Q or Fp:P");
    gen->add_option("--blocks", gen_blocks, "e.g. kron:1,jinf:2,jordan:1/2:3")->required();
    gen->add_option("--seed", gen_seed, "64-bit seed, or 'identity'");
    gen->add_option("--entry-bound", gen_bound, "entry magnitude of the basis change over Q");
    gen->add_option("--out", gen_out, "output file, stdout by default");

    std::string rt_field = "Q", rt_blocks, rt_seed = "0";
    long rt_bound = 3;
    auto* rt = app.add_subcommand("roundtrip", "generate, decompose, compare block lists");
    rt->add_option("--field", rt_field, "Q or Fp:P");
    rt->add_option("--blocks", rt_blocks, "block list")->required();
    rt->add_option("--seed", rt_seed, "64-bit seed, or 'identity'");
    rt->add_option("--entry-bound", rt_bound, "entry magnitude of the basis change over Q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed()) return run_decompose(in_path, out_path, ordering_s, want_trace);
        if (ver->parsed()) return run_verify(pencil_path, result_path);
        if (inv->parsed()) return run_invariants(inv_in);
        if (gen->parsed())
            return run_generate(build_spec(gen_field, gen_blocks, gen_seed, gen_bound),
                                gen_out);
        if (rt->parsed())
            return run_roundtrip(build_spec(rt_field, rt_blocks, rt_seed, rt_bound));
    } catch (const Error& e) {
        return diag(e.kind(), e.detail());
    } catch (const std::exception& e) {
        return diag("Internal", e.what());
    }
    return 1;
}
