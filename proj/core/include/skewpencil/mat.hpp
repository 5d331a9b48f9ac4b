#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewpencil/field.hpp"

namespace skewpencil {

// Dense row-major matrix over a single field. 0xn, nx0 and 0x0 shapes are
// legal and behave as the empty products they are.
class Mat {
public:
    Mat(FieldDescriptor f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Mat identity(const FieldDescriptor& f, std::size_t n);
    static Mat from_rows(const FieldDescriptor& f,
                         const std::vector<std::vector<Scalar>>& rows);
    // Integer literals, rationals only in spirit but valid over any field.
    static Mat from_int_rows(const FieldDescriptor& f,
                             const std::vector<std::vector<long>>& rows);

    const FieldDescriptor& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const Scalar& c) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat col(std::size_t j) const;  // n x 1 slice
    Mat cols_range(std::size_t begin, std::size_t end) const;
    static Mat hcat(const Mat& l, const Mat& r);
    void set_col(std::size_t j, const Mat& v);

    std::string str() const;  // compact debug rendering

private:
    FieldDescriptor f_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Mat R;                           // reduced row-echelon form of the input
    Mat T;                           // accumulated row operations, R == T * M
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

// Gauss-Jordan with the first nonzero entry of each column as pivot, so the
// result is deterministic for equal inputs.
RrefResult rref(const Mat& m);

// Kernel basis, one column per free variable in increasing column order; the
// free coordinate itself is set to 1. Width 0 means trivial kernel.
Mat kernel_basis(const Mat& m);

// Particular solution of M x = rhs (column-wise) with free variables set to 0,
// or nullopt when inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& rhs);

Mat inverse(const Mat& m);  // Singular / NonSquare

// T^t * A * T for T with full column rank not required here; shape checked.
Mat congruence(const Mat& t, const Mat& a);

// Exact determinant via fraction-free (Bareiss) elimination.
Scalar determinant(const Mat& m);  // NonSquare

std::size_t rank_of(const Mat& m);

}  // namespace skewpencil
