#pragma once

#include <vector>

#include "skewpencil/field.hpp"
#include "skewpencil/mat.hpp"
#include "skewpencil/poly.hpp"

namespace testutil {

using namespace skewpencil;

inline FieldDescriptor QQ() { return FieldDescriptor::rationals(); }
inline FieldDescriptor FP(std::uint64_t p) { return FieldDescriptor::prime_field(p); }

inline Mat im(const FieldDescriptor& f, const std::vector<std::vector<long>>& rows) {
    return Mat::from_int_rows(f, rows);
}

inline Scalar sc(const FieldDescriptor& f, long v) { return Scalar::from_int(f, v); }

// Cofactor-expansion determinant, independent of the elimination code paths.
inline Scalar det_cofactor(const Mat& m) {
    const FieldDescriptor f = m.field();
    std::size_t n = m.rows();
    if (n == 0) return Scalar::one(f);
    if (n == 1) return m.at(0, 0);
    Scalar acc = Scalar::zero(f);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat minor(f, n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Scalar term = m.at(0, j) * det_cofactor(minor);
        acc = j % 2 == 0 ? acc + term : acc - term;
    }
    return acc;
}

// det(tI - M) computed over polynomial entries by cofactor expansion,
// independent of the division-free recurrence in the library.
inline Poly char_poly_cofactor(const Mat& m) {
    const FieldDescriptor f = m.field();
    std::size_t n = m.rows();
    std::vector<std::vector<Poly>> p(n, std::vector<Poly>(n, Poly::zero(f)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            p[i][j] = Poly::constant(Scalar::zero(f) - m.at(i, j));
            if (i == j) p[i][j] = p[i][j] + Poly::monomial(f, 1, Scalar::one(f));
        }
    struct Rec {
        const FieldDescriptor& f;
        Poly operator()(const std::vector<std::vector<Poly>>& a) const {
            std::size_t k = a.size();
            if (k == 0) return Poly::constant(Scalar::one(f));
            if (k == 1) return a[0][0];
            Poly acc = Poly::zero(f);
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<std::vector<Poly>> minor;
                for (std::size_t r = 1; r < k; ++r) {
                    std::vector<Poly> row;
                    for (std::size_t c = 0; c < k; ++c)
                        if (c != j) row.push_back(a[r][c]);
                    minor.push_back(std::move(row));
                }
                Poly term = a[0][j] * (*this)(minor);
                acc = j % 2 == 0 ? acc + term : acc - term;
            }
            return acc;
        }
    };
    return Rec{f}(p);
}

// Deterministic low-tech matrix fill for property tests; avoids reaching into
// the library generator so the two sides stay independent.
struct MixRng {
    std::uint64_t s;
    explicit MixRng(std::uint64_t seed) : s(seed + 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) {
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }
};

inline Mat random_mat(const FieldDescriptor& f, std::size_t r, std::size_t c,
                      std::uint64_t seed, long bound = 5) {
    MixRng g(seed);
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = sc(f, f.is_rationals() ? g.small(-bound, bound)
                                                : g.small(0, long(f.prime()) - 1));
    return m;
}

}  // namespace testutil
