#include "skewpencil/invariants.hpp"

#include <map>

#include "skewpencil/errors.hpp"

namespace skewpencil {

namespace {

// Canonical field enumeration 0, 1, -1, 2, -2, ... (residue order over F_p).
Scalar nth_field_element(const FieldDescriptor& f, std::size_t i) {
    if (f.is_prime_field()) return Scalar::residue(f, i % f.prime());
    if (i == 0) return Scalar::zero(f);
    long mag = static_cast<long>((i + 1) / 2);
    return Scalar::from_int(f, i % 2 == 1 ? mag : -mag);
}

std::size_t field_point_count(const FieldDescriptor& f, std::size_t cap) {
    if (f.is_rationals()) return cap;
    return static_cast<std::size_t>(std::min<std::uint64_t>(f.prime(), cap));
}

}  // namespace

Poly det_pencil(const Pencil& p) {
    const FieldDescriptor& f = p.field;
    if (f.is_prime_field() && f.prime() <= p.n + 1)
        fail("NotEnoughSamplePoints",
             "need p > n + 1 sample points: n = " + std::to_string(p.n) +
                 ", p = " + std::to_string(f.prime()));
    std::vector<std::pair<Scalar, Scalar>> pts;
    for (std::size_t i = 0; i <= p.n; ++i) {
        Scalar x = Scalar::from_int(f, static_cast<long>(i));
        pts.emplace_back(x, determinant(p.A + p.B.scaled(x)));
    }
    return poly_interpolate(pts);
}

std::size_t corank_at(const Pencil& p, const Scalar& mu) {
    if (mu.field() != p.field) fail("MixedFields", "sample point over different field");
    return p.n - rank_of(p.A + p.B.scaled(mu));
}

std::size_t generic_corank(const Pencil& p) {
    std::size_t best = rank_of(p.B);  // point at infinity
    std::size_t pts = field_point_count(p.field, p.n + 1);
    for (std::size_t i = 0; i < pts; ++i) {
        Scalar mu = p.field.is_prime_field() ? Scalar::residue(p.field, i)
                                             : Scalar::from_int(p.field, static_cast<long>(i));
        std::size_t r = rank_of(p.A + p.B.scaled(mu));
        if (r > best) best = r;
    }
    return p.n - best;
}

InvariantReport invariant_report(const Pencil& p) {
    InvariantReport rep;
    try {
        rep.det = det_pencil(p);
    } catch (const Error& e) {
        if (e.kind() != "NotEnoughSamplePoints") throw;
    }
    rep.generic_corank = generic_corank(p);
    rep.corank_a = p.n - rank_of(p.A);
    rep.corank_b = p.n - rank_of(p.B);
    return rep;
}

CrossCheckReport cross_check(const Pencil& p, const Decomposition& d) {
    CrossCheckReport rep;
    auto flag = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };
    const FieldDescriptor& f = p.field;
    if (d.field != f) {
        flag("field mismatch");
        return rep;
    }

    std::size_t n_kron = 0, n_jinf = 0, dims = 0;
    std::map<Scalar, std::pair<std::size_t, std::size_t>, ScalarLess> finite;  // count, sum k
    for (const auto& bl : d.blocks) {
        dims += bl.dim();
        switch (bl.type) {
            case BlockType::Kronecker: ++n_kron; break;
            case BlockType::JordanInfinite: ++n_jinf; break;
            case BlockType::JordanFinite: {
                auto& e = finite[bl.lambda];
                e.first += 1;
                e.second += bl.k;
                break;
            }
        }
    }

    if (dims != p.n)
        flag("block dimensions sum to " + std::to_string(dims) + ", pencil has n = " +
             std::to_string(p.n));

    std::size_t corank_b = p.n - rank_of(p.B);
    if (corank_b != n_kron + 2 * n_jinf)
        flag("corank of B is " + std::to_string(corank_b) + ", blocks predict " +
             std::to_string(n_kron + 2 * n_jinf));

    bool generic_reliable = true;
    if (f.is_prime_field()) {
        bool has_spare_point = f.prime() > finite.size();
        generic_reliable = has_spare_point || n_jinf == 0;
    }
    if (generic_reliable) {
        std::size_t gc = generic_corank(p);
        if (gc != n_kron)
            flag("generic corank is " + std::to_string(gc) + ", blocks predict " +
                 std::to_string(n_kron));
    } else {
        rep.skipped.push_back("generic corank: every field point is an eigenvalue");
    }

    for (const auto& [lam, cnt] : finite) {
        Scalar mu = -lam;
        std::size_t c = corank_at(p, mu);
        std::size_t expect = n_kron + 2 * cnt.first;
        if (c != expect)
            flag("corank at mu = " + mu.str() + " is " + std::to_string(c) +
                 ", blocks predict " + std::to_string(expect));
    }

    // Three smallest points whose negation is not an eigenvalue.
    std::size_t found = 0, budget = field_point_count(f, p.n + 7);
    for (std::size_t i = 0; i < budget && found < 3; ++i) {
        Scalar mu = nth_field_element(f, i);
        if (finite.count(-mu)) continue;
        ++found;
        std::size_t c = corank_at(p, mu);
        if (c != n_kron)
            flag("corank at non-eigenvalue mu = " + mu.str() + " is " + std::to_string(c) +
                 ", blocks predict " + std::to_string(n_kron));
    }
    if (found < 3)
        rep.skipped.push_back("only " + std::to_string(found) +
                              " non-eigenvalue sample points available");

    try {
        Poly det = det_pencil(p);
        if (n_kron > 0) {
            if (!det.is_zero()) flag("kronecker blocks present but det(A + tB) != 0");
        } else if (det.is_zero()) {
            flag("no kronecker blocks but det(A + tB) == 0");
        } else {
            Poly expect = Poly::constant(Scalar::one(f));
            for (const auto& [lam, cnt] : finite) {
                Poly lin(f, {lam, Scalar::one(f)});
                for (std::size_t i = 0; i < 2 * cnt.second; ++i) expect = expect * lin;
            }
            if (det.monic() != expect)
                flag("det(A + tB) does not factor as the blocks predict");
        }
    } catch (const Error& e) {
        if (e.kind() != "NotEnoughSamplePoints") throw;
        rep.skipped.push_back("determinant factorization: field too small to interpolate");
    }
    return rep;
}

}  // namespace skewpencil
