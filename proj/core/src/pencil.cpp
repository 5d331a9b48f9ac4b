#include "skewpencil/pencil.hpp"

#include <sstream>

#include "skewpencil/errors.hpp"

namespace skewpencil {

std::string Block::str() const {
    std::ostringstream os;
    switch (type) {
        case BlockType::Kronecker: os << "kron:" << k; break;
        case BlockType::JordanInfinite: os << "jinf:" << k; break;
        case BlockType::JordanFinite: os << "jordan:" << lambda.str() << ":" << k; break;
    }
    return os.str();
}

Pencil validate_pencil(const Mat& a, const Mat& b) {
    if (!a.is_square() || !b.is_square()) fail("NotSquare", "pencil matrices must be square");
    if (a.rows() != b.rows()) fail("DimensionMismatch", "pencil matrices differ in size");
    if (a.field() != b.field()) fail("MixedFields", "pencil matrices over different fields");
    auto check_skew = [](const Mat& m, char which) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i; j < m.cols(); ++j)
                if (m.at(i, j) + m.at(j, i) != Scalar::zero(m.field()) ||
                    (i == j && !m.at(i, i).is_zero()))
                    throw NotSkewError(which, i, j);
    };
    check_skew(a, 'A');
    check_skew(b, 'B');
    return Pencil{a.field(), a.rows(), a, b};
}

static void check_k(const Block& block) {
    if (block.type != BlockType::Kronecker && block.k < 1)
        fail("InvalidK", "k must be >= 1 for Jordan blocks");
}

std::vector<std::size_t> block_basis_permutation(const Block& block,
                                                 BasisOrdering ordering) {
    check_k(block);
    std::size_t n = block.dim();
    std::vector<std::size_t> perm(n);
    if (ordering == BasisOrdering::Split) {
        for (std::size_t q = 0; q < n; ++q) perm[q] = q;
        return perm;
    }
    std::size_t k = block.k;
    if (block.type == BlockType::Kronecker) {
        // Split: (e_1..e_k, f_0..f_k); interleaved: (f_0, e_1, f_1, ..., e_k, f_k).
        perm[0] = k;
        for (std::size_t i = 1; i <= k; ++i) {
            perm[2 * i - 1] = i - 1;
            perm[2 * i] = k + i;
        }
    } else {
        // Split: (e_1..e_k, f_1..f_k); interleaved: (f_1, e_1, ..., f_k, e_k).
        for (std::size_t i = 1; i <= k; ++i) {
            perm[2 * (i - 1)] = k + i - 1;
            perm[2 * (i - 1) + 1] = i - 1;
        }
    }
    return perm;
}

std::pair<Mat, Mat> materialize_block(const FieldDescriptor& f, const Block& block,
                                      BasisOrdering ordering) {
    check_k(block);
    if (block.lambda.field() != f)
        fail("MixedFields", "block eigenvalue over a different field");
    std::size_t n = block.dim();
    std::size_t k = block.k;
    Mat a(f, n, n), b(f, n, n);
    Scalar one = Scalar::one(f);
    auto set_pair = [&](Mat& m, std::size_t i, std::size_t j, const Scalar& v) {
        m.at(i, j) = v;
        m.at(j, i) = Scalar::zero(f) - v;
    };
    switch (block.type) {
        case BlockType::JordanFinite:
            // Basis (e_1..e_k, f_1..f_k): A(e_i, f_i) = lambda, A(e_i, f_{i+1}) = 1,
            // B(e_i, f_i) = 1.
            for (std::size_t i = 0; i < k; ++i) {
                set_pair(a, i, k + i, block.lambda);
                if (i + 1 < k) set_pair(a, i, k + i + 1, one);
                set_pair(b, i, k + i, one);
            }
            break;
        case BlockType::JordanInfinite:
            // A(e_i, f_i) = 1, B(e_i, f_{i+1}) = 1.
            for (std::size_t i = 0; i < k; ++i) {
                set_pair(a, i, k + i, one);
                if (i + 1 < k) set_pair(b, i, k + i + 1, one);
            }
            break;
        case BlockType::Kronecker:
            // Basis (e_1..e_k, f_0..f_k): A(e_i, f_{i-1}) = 1, B(e_i, f_i) = 1.
            for (std::size_t i = 1; i <= k; ++i) {
                set_pair(a, i - 1, k + i - 1, one);
                set_pair(b, i - 1, k + i, one);
            }
            break;
    }
    if (ordering == BasisOrdering::Split) return {a, b};
    std::vector<std::size_t> perm = block_basis_permutation(block, ordering);
    Mat pm(f, n, n);
    for (std::size_t q = 0; q < n; ++q) pm.at(perm[q], q) = one;
    return {congruence(pm, a), congruence(pm, b)};
}

Pencil assemble(const FieldDescriptor& f, const std::vector<Block>& blocks,
                BasisOrdering ordering) {
    std::size_t n = 0;
    for (const auto& bl : blocks) n += bl.dim();
    Mat a(f, n, n), b(f, n, n);
    std::size_t off = 0;
    for (const auto& bl : blocks) {
        auto [ba, bb] = materialize_block(f, bl, ordering);
        for (std::size_t i = 0; i < bl.dim(); ++i)
            for (std::size_t j = 0; j < bl.dim(); ++j) {
                a.at(off + i, off + j) = ba.at(i, j);
                b.at(off + i, off + j) = bb.at(i, j);
            }
        off += bl.dim();
    }
    return Pencil{f, n, std::move(a), std::move(b)};
}

Pencil restrict_pencil(const Pencil& p, const Mat& c) {
    if (c.field() != p.field) fail("MixedFields", "restriction basis over different field");
    if (c.rows() != p.n) fail("DimensionMismatch", "restriction basis height");
    if (rank_of(c) != c.cols()) fail("DependentColumns", "restriction basis not independent");
    return Pencil{p.field, c.cols(), congruence(c, p.A), congruence(c, p.B)};
}

Mat biorthogonal_complement(const Pencil& p, const Mat& s_cols) {
    if (s_cols.field() != p.field) fail("MixedFields", "span over different field");
    if (s_cols.rows() != p.n) fail("DimensionMismatch", "span height");
    Mat st = s_cols.transpose();
    Mat stacked = Mat::hcat((st * p.A).transpose(), (st * p.B).transpose()).transpose();
    return kernel_basis(stacked);
}

bool block_less(const Block& a, const Block& b) {
    auto rank = [](BlockType t) {
        switch (t) {
            case BlockType::Kronecker: return 0;
            case BlockType::JordanInfinite: return 1;
            case BlockType::JordanFinite: return 2;
        }
        return 3;
    };
    if (rank(a.type) != rank(b.type)) return rank(a.type) < rank(b.type);
    if (a.type == BlockType::JordanFinite) {
        int c = Scalar::cmp(a.lambda, b.lambda);
        if (c != 0) return c < 0;
    }
    return a.k < b.k;
}

}  // namespace skewpencil
