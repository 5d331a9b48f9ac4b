#include "skewpencil/io.hpp"

#include <json.hpp>

#include "skewpencil/errors.hpp"

namespace skewpencil {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
}

json field_json(const FieldDescriptor& f) {
    if (f.is_rationals()) return "Q";
    return json{{"Fp", f.prime()}};
}

FieldDescriptor field_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return FieldDescriptor::rationals();
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer() &&
        j["Fp"].get<long long>() > 0)
        return FieldDescriptor::prime_field(j["Fp"].get<std::uint64_t>());
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned())
        return FieldDescriptor::prime_field(j["Fp"].get<std::uint64_t>());
    throw ParseError("field must be \"Q\" or {\"Fp\": p}", 0, 0);
}

const json& require_key(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'", 0, 0);
    return j[key];
}

Scalar scalar_from_json(const FieldDescriptor& f, const json& cell, std::size_t i,
                        std::size_t jj) {
    if (!cell.is_string())
        throw ParseError("matrix entries must be strings", i, jj);
    try {
        return Scalar::parse(f, cell.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(e.detail(), i, jj);
    }
}

Mat mat_from_json(const FieldDescriptor& f, const json& j, std::size_t rows,
                  std::size_t cols, const char* name) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(std::string(name) + " must be an array of " +
                             std::to_string(rows) + " rows",
                         0, 0);
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(std::string(name) + " row has wrong width", i, 0);
        for (std::size_t jj = 0; jj < cols; ++jj)
            m.at(i, jj) = scalar_from_json(f, row[jj], i, jj);
    }
    return m;
}

json mat_rows_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json mat_cols_json(const Mat& m) {
    json cols = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        json col = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(m.at(i, j).str());
        cols.push_back(std::move(col));
    }
    return cols;
}

json block_json(const Block& b) {
    switch (b.type) {
        case BlockType::Kronecker: return json{{"type", "kronecker"}, {"k", b.k}};
        case BlockType::JordanInfinite: return json{{"type", "jordan_inf"}, {"k", b.k}};
        case BlockType::JordanFinite:
            return json{{"type", "jordan"}, {"lambda", b.lambda.str()}, {"k", b.k}};
    }
    throw Error("InternalInvariantViolation", "unknown block type");
}

Block checked_block(Block b) {
    if (b.type != BlockType::Kronecker && b.k < 1)
        throw Error("InvalidK", "k must be >= 1 for Jordan blocks");
    return b;
}

Block block_from_json(const FieldDescriptor& f, const json& j, std::size_t idx) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string() ||
        !j.contains("k") || !j["k"].is_number_unsigned())
        throw ParseError("block must be {type, [lambda], k}", idx, 0);
    std::string type = j["type"].get<std::string>();
    std::size_t k = j["k"].get<std::size_t>();
    if (type == "kronecker") return Block::kronecker(f, k);
    if (type == "jordan_inf") return checked_block(Block::jordan_inf(f, k));
    if (type == "jordan") {
        if (!j.contains("lambda") || !j["lambda"].is_string())
            throw ParseError("jordan block needs a lambda string", idx, 0);
        return checked_block(
            Block::jordan(Scalar::parse(f, j["lambda"].get<std::string>()), k));
    }
    throw ParseError("unknown block type '" + type + "'", idx, 0);
}

std::size_t size_from_json(const json& j, const char* key) {
    const json& v = require_key(j, key);
    if (!v.is_number_unsigned())
        throw ParseError(std::string("'") + key + "' must be a nonnegative integer", 0, 0);
    return v.get<std::size_t>();
}

}  // namespace

PencilFile parse_pencil_file(const std::string& text) {
    json j = parse_json(text);
    FieldDescriptor f = field_from_json(require_key(j, "field"));
    std::size_t n = size_from_json(j, "n");
    Mat a = mat_from_json(f, require_key(j, "A"), n, n, "A");
    Mat b = mat_from_json(f, require_key(j, "B"), n, n, "B");
    return PencilFile{f, std::move(a), std::move(b)};
}

std::string serialize_pencil_file(const PencilFile& pf,
                                  const std::vector<Block>* expected_blocks) {
    json out;
    out["field"] = field_json(pf.field);
    out["n"] = pf.A.rows();
    out["A"] = mat_rows_json(pf.A);
    out["B"] = mat_rows_json(pf.B);
    if (expected_blocks) {
        json blocks = json::array();
        for (const auto& b : *expected_blocks) blocks.push_back(block_json(b));
        out["expected_blocks"] = std::move(blocks);
    }
    return out.dump(2) + "\n";
}

std::string serialize_result(const Decomposition& d0, bool verified,
                             BasisOrdering ordering,
                             const std::vector<ExtractionTrace>* traces) {
    Decomposition d = reorder_basis(d0, ordering);
    json out;
    out["field"] = field_json(d.field);
    out["n"] = d.n;
    out["ordering"] = ordering == BasisOrdering::Split ? "split" : "interleaved";
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(block_json(b));
    out["blocks"] = std::move(blocks);
    json ranges = json::array();
    for (const auto& r : d.ranges) ranges.push_back(json::array({r.begin, r.end}));
    out["ranges"] = std::move(ranges);
    out["basis"] = mat_cols_json(d.T);
    out["verified"] = verified;
    if (traces) {
        json tr = json::array();
        for (const auto& t : *traces) {
            json steps = json::array();
            for (const auto& s : t.steps)
                steps.push_back(json{{"stage", s.stage},
                                     {"note", s.note},
                                     {"chain_len", s.chain_len},
                                     {"dim_w", s.dim_w}});
            tr.push_back(json{{"used_fallback", t.used_fallback},
                              {"steps", std::move(steps)}});
        }
        out["trace"] = std::move(tr);
    }
    return out.dump(2) + "\n";
}

ParsedResult parse_result_file(const std::string& text) {
    json j = parse_json(text);
    FieldDescriptor f = field_from_json(require_key(j, "field"));
    std::size_t n = size_from_json(j, "n");
    const json& ord = require_key(j, "ordering");
    BasisOrdering ordering;
    if (ord.is_string() && ord.get<std::string>() == "split")
        ordering = BasisOrdering::Split;
    else if (ord.is_string() && ord.get<std::string>() == "interleaved")
        ordering = BasisOrdering::Interleaved;
    else
        throw ParseError("ordering must be \"split\" or \"interleaved\"", 0, 0);
    const json& jb = require_key(j, "blocks");
    if (!jb.is_array()) throw ParseError("'blocks' must be an array", 0, 0);
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < jb.size(); ++i)
        blocks.push_back(block_from_json(f, jb[i], i));
    const json& jr = require_key(j, "ranges");
    if (!jr.is_array() || jr.size() != blocks.size())
        throw ParseError("'ranges' must match the block list", 0, 0);
    std::vector<BlockRange> ranges;
    for (std::size_t i = 0; i < jr.size(); ++i) {
        const json& r = jr[i];
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_unsigned() ||
            !r[1].is_number_unsigned())
            throw ParseError("range must be [begin, end]", i, 0);
        ranges.push_back({r[0].get<std::size_t>(), r[1].get<std::size_t>()});
    }
    const json& jt = require_key(j, "basis");
    if (!jt.is_array() || jt.size() != n)
        throw ParseError("'basis' must hold n columns", 0, 0);
    Mat t(f, n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const json& col = jt[c];
        if (!col.is_array() || col.size() != n)
            throw ParseError("basis column has wrong height", 0, c);
        for (std::size_t r = 0; r < n; ++r)
            t.at(r, c) = scalar_from_json(f, col[r], r, c);
    }
    bool verified = j.contains("verified") && j["verified"].is_boolean() &&
                    j["verified"].get<bool>();
    return ParsedResult{Decomposition{f, n, std::move(t), std::move(blocks),
                                      std::move(ranges)},
                        ordering, verified};
}

std::string serialize_split_failure(const SplitFailureError& e) {
    json err;
    err["kind"] = "SplitFailure";
    err["detail"] = e.detail();
    err["remainder"] = e.remainder.str();
    json coeffs = json::array();
    for (const auto& c : e.remainder.coeffs()) coeffs.push_back(c.str());
    err["remainder_coeffs"] = std::move(coeffs);
    err["degree_hints"] = e.degree_hints;
    if (e.has_partial) {
        json blocks = json::array();
        for (const auto& b : e.partial_blocks) blocks.push_back(block_json(b));
        err["partial_blocks"] = std::move(blocks);
        json basis = json::array();
        for (const auto& m : e.partial_chains) basis.push_back(mat_cols_json(m));
        err["partial_basis"] = std::move(basis);
        err["residual_basis"] = mat_cols_json(e.residual[0]);
        err["residual_A"] = mat_rows_json(e.residual[1]);
        err["residual_B"] = mat_rows_json(e.residual[2]);
    }
    json out;
    out["error"] = std::move(err);
    return out.dump(2) + "\n";
}

std::vector<Block> parse_block_specs(const FieldDescriptor& f, const std::string& text) {
    std::vector<Block> out;
    std::size_t pos = 0, idx = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        // trim surrounding whitespace
        std::size_t b = tok.find_first_not_of(" \t");
        std::size_t e = tok.find_last_not_of(" \t");
        tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
        if (tok.empty())
            throw ParseError("empty block spec", 0, idx);
        std::vector<std::string> parts;
        std::size_t p = 0;
        while (true) {
            std::size_t colon = tok.find(':', p);
            if (colon == std::string::npos) {
                parts.push_back(tok.substr(p));
                break;
            }
            parts.push_back(tok.substr(p, colon - p));
            p = colon + 1;
        }
        auto parse_k = [&](const std::string& s) -> std::size_t {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad k in block spec '" + tok + "'", 0, idx);
            return static_cast<std::size_t>(std::stoull(s));
        };
        if (parts[0] == "kron" && parts.size() == 2)
            out.push_back(Block::kronecker(f, parse_k(parts[1])));
        else if (parts[0] == "jinf" && parts.size() == 2)
            out.push_back(checked_block(Block::jordan_inf(f, parse_k(parts[1]))));
        else if (parts[0] == "jordan" && parts.size() == 3)
            out.push_back(checked_block(
                Block::jordan(Scalar::parse(f, parts[1]), parse_k(parts[2]))));
        else
            throw ParseError("bad block spec '" + tok + "'", 0, idx);
        ++idx;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw ParseError("block list is empty", 0, 0);
    return out;
}

std::string format_block_specs(const std::vector<Block>& blocks) {
    std::string out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out += ",";
        out += blocks[i].str();
    }
    return out;
}

FieldDescriptor parse_field_text(const std::string& text) {
    if (text == "Q") return FieldDescriptor::rationals();
    if (text.rfind("Fp:", 0) == 0) {
        std::string num = text.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad field '" + text + "'", 0, 0);
        return FieldDescriptor::prime_field(std::stoull(num));
    }
    throw ParseError("field must be 'Q' or 'Fp:P'", 0, 0);
}

}  // namespace skewpencil
