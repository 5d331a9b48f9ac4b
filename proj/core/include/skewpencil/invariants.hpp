#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewpencil/decompose.hpp"
#include "skewpencil/pencil.hpp"
#include "skewpencil/poly.hpp"

namespace skewpencil {

// det(A + t B) from n+1 point evaluations and interpolation. Over F_p the
// sample points 0..n must fit, which needs p > n + 1
// (NotEnoughSamplePoints otherwise).
Poly det_pencil(const Pencil& p);

std::size_t corank_at(const Pencil& p, const Scalar& mu);  // n - rank(A + mu B)

// n minus the largest rank of A + mu B over a deterministic sample set
// (mu = 0, 1, ... plus B alone as the point at infinity).
std::size_t generic_corank(const Pencil& p);

struct InvariantReport {
    std::optional<Poly> det;  // empty when the field has too few points
    std::size_t generic_corank = 0;
    std::size_t corank_a = 0;
    std::size_t corank_b = 0;
};

InvariantReport invariant_report(const Pencil& p);

struct CrossCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> skipped;
};

// Rank-based consistency of a claimed block list against the pencil itself:
// corank counts at the coefficient matrix, at shifted matrices for each
// eigenvalue, at non-eigenvalue points, and the determinant factorization.
CrossCheckReport cross_check(const Pencil& p, const Decomposition& d);

}  // namespace skewpencil
