#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewpencil/pencil.hpp"
#include "skewpencil/poly.hpp"

namespace skewpencil {

struct BlockRange {
    std::size_t begin;
    std::size_t end;  // half-open column range into T
    bool operator==(const BlockRange&) const = default;
};

// A completed decomposition: congruence(T, A) and congruence(T, B) equal the
// Split-ordered assembly of blocks, whose columns sit at the given ranges.
struct Decomposition {
    FieldDescriptor field;
    std::size_t n;
    Mat T;
    std::vector<Block> blocks;
    std::vector<BlockRange> ranges;
};

struct ExtractionStep {
    std::string stage;
    std::string note;
    std::size_t chain_len = 0;
    std::size_t dim_w = 0;
};

struct ExtractionTrace {
    std::vector<ExtractionStep> steps;
    bool used_fallback = false;
};

// One degenerate block split off a pencil with singular B. chain holds the
// block basis in Split order; complement spans the rest, biorthogonal to the
// chain under both forms.
struct Extraction {
    Mat chain;
    Block block;
    Mat complement;
    ExtractionTrace trace;
};

// Requires Ker B != 0 (PreconditionBNondegenerate otherwise). Attempts the
// pivot-greedy chain construction first; if any of its step or exit checks
// fail, switches to the kernel-chain fallback, whose output is checked
// unconditionally (InternalInvariantViolation on any miss).
Extraction extract_degenerate_block(const Pencil& p);

// Chains of a nilpotent operator self-adjoint for a nondegenerate skew form:
// each chain is a d x 2m matrix (e_1..e_m, f_1..f_m) with n e_i = e_{i+1},
// n f_i = f_{i-1}, b(e_i, f_j) = delta_ij and both families isotropic.
// Distinct chains are b-orthogonal and together they span the space.
struct NilpotentChains {
    std::vector<Mat> chains;
};
NilpotentChains nilpotent_jordan_block(const Mat& n_op, const Mat& b_form);
// errors: DimensionMismatch, NotSkew, Singular, NotNilpotent, NotSelfAdjoint

// Generalized eigenspace split of P = B^{-1} A for a pencil with B
// invertible: (eigenvalue, basis) pairs in canonical eigenvalue order, each
// basis B-orthogonal to the others with even width equal to the algebraic
// multiplicity. Throws SplitFailureError when the characteristic polynomial
// does not factor into linear terms over the field.
std::vector<std::pair<Scalar, Mat>> regular_eigensplit(const Pencil& p);

class SplitFailureError : public Error {
public:
    SplitFailureError(Poly remainder_core, std::vector<std::size_t> hints)
        : Error("SplitFailure",
                "characteristic polynomial has an irreducible factor: " +
                    remainder_core.str()),
          remainder(std::move(remainder_core)),
          degree_hints(std::move(hints)) {}

    Poly remainder;                        // square-free core, monic
    std::vector<std::size_t> degree_hints; // square-free part degrees with multiplicity
    // Filled in by decompose(): has_partial marks that the fields below are
    // meaningful. partial_blocks may be empty when the failure hit before any
    // degenerate block was split off; the residual triple is always attached.
    std::vector<Block> partial_blocks;
    std::vector<Mat> partial_chains;       // global columns per partial block
    bool has_partial = false;
    std::vector<Mat> residual;             // residual basis, A, B (in that order)
};

struct DecomposeResult {
    Decomposition decomposition;
    std::vector<ExtractionTrace> traces;  // one per degenerate extraction
};

// Full canonical decomposition. Throws SplitFailureError (with partial data)
// when eigenvalues do not all lie in the field; InternalInvariantViolation
// indicates a broken internal step and should never escape on valid input.
DecomposeResult decompose(const Mat& a, const Mat& b);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Re-derives nothing: checks shapes, invertibility of T, canonical block
// order, range consistency and the two congruence identities.
VerifyReport verify(const Mat& a, const Mat& b, const Decomposition& d,
                    BasisOrdering ordering = BasisOrdering::Split);

void canonical_sort(std::vector<Block>& blocks);

// Rewrites T and ranges of a Split-ordered decomposition into the interleaved
// per-block layout (used for presentation; verify with the same ordering).
Decomposition reorder_basis(const Decomposition& d, BasisOrdering ordering);

}  // namespace skewpencil
