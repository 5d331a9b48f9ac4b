#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewpencil/mat.hpp"

namespace skewpencil {

enum class BlockType { Kronecker, JordanInfinite, JordanFinite };

// One canonical block. k is the chain length parameter: JordanFinite and
// JordanInfinite blocks span 2k basis vectors (k >= 1), Kronecker blocks span
// 2k+1 (k >= 0, so k = 0 is the common 1x1 zero block). lambda is only
// meaningful for JordanFinite and holds a zero placeholder otherwise.
struct Block {
    BlockType type;
    std::size_t k;
    Scalar lambda;

    static Block jordan(const Scalar& lambda, std::size_t k) {
        return Block{BlockType::JordanFinite, k, lambda};
    }
    static Block jordan_inf(const FieldDescriptor& f, std::size_t k) {
        return Block{BlockType::JordanInfinite, k, Scalar::zero(f)};
    }
    static Block kronecker(const FieldDescriptor& f, std::size_t k) {
        return Block{BlockType::Kronecker, k, Scalar::zero(f)};
    }

    std::size_t dim() const {
        return type == BlockType::Kronecker ? 2 * k + 1 : 2 * k;
    }
    bool operator==(const Block& o) const {
        return type == o.type && k == o.k && lambda == o.lambda;
    }
    bool operator!=(const Block& o) const { return !(*this == o); }
    std::string str() const;
};

// Basis layouts for a materialized block. Split lists one chain family first
// and the other second; Interleaved alternates them so both matrices become
// tridiagonal-of-2x2 displays. Both are permutations of the same bilinear
// data.
enum class BasisOrdering { Split, Interleaved };

struct Pencil {
    FieldDescriptor field;
    std::size_t n;
    Mat A;
    Mat B;
};

// Shape, field and skew-symmetry checks; throws NotSquare, DimensionMismatch,
// MixedFields or NotSkew (with the offending entry).
Pencil validate_pencil(const Mat& a, const Mat& b);

// Canonical matrices (A_block, B_block) of a single block.
std::pair<Mat, Mat> materialize_block(const FieldDescriptor& f, const Block& block,
                                      BasisOrdering ordering);  // InvalidK

// Permutation taking Split positions to the given ordering: entry q of the
// result is the Split index placed at position q.
std::vector<std::size_t> block_basis_permutation(const Block& block,
                                                 BasisOrdering ordering);

// Block-diagonal pencil assembled from a block list.
Pencil assemble(const FieldDescriptor& f, const std::vector<Block>& blocks,
                BasisOrdering ordering);

// Pull both forms back along the columns of c, which must be independent.
Pencil restrict_pencil(const Pencil& p, const Mat& c);  // DependentColumns

// Basis of { v : s^t A v = 0 and s^t B v = 0 } for the columns s of s_cols.
Mat biorthogonal_complement(const Pencil& p, const Mat& s_cols);

// Strict ordering used for canonical block lists: Kronecker blocks first,
// then JordanInfinite, then JordanFinite; k ascending within a type, and
// JordanFinite keyed by eigenvalue before k.
bool block_less(const Block& a, const Block& b);

}  // namespace skewpencil
