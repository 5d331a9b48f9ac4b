#include "skewpencil/mat.hpp"

#include <sstream>

#include "skewpencil/errors.hpp"

namespace skewpencil {

Mat Mat::identity(const FieldDescriptor& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_rows(const FieldDescriptor& f,
                   const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail("DimensionMismatch", "ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_int_rows(const FieldDescriptor& f,
                       const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail("DimensionMismatch", "ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(f, rows[i][j]);
    }
    return m;
}

static void check_same_field(const Mat& a, const Mat& b) {
    if (a.field() != b.field()) fail("MixedFields", "matrix operands over different fields");
}

Mat Mat::operator+(const Mat& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("DimensionMismatch", "matrix add");
    Mat m(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) fail("DimensionMismatch", "matrix sub");
    Mat m(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    check_same_field(*this, o);
    if (cols_ != o.rows_) fail("DimensionMismatch", "matrix mul");
    Mat m(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) = m.at(i, j) + aik * o.at(k, j);
        }
    return m;
}

Mat Mat::scaled(const Scalar& c) const {
    Mat m(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

Mat Mat::transpose() const {
    Mat m(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::col(std::size_t j) const { return cols_range(j, j + 1); }

Mat Mat::cols_range(std::size_t begin, std::size_t end) const {
    if (begin > end || end > cols_) fail("DimensionMismatch", "column slice out of range");
    Mat m(f_, rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = begin; j < end; ++j) m.at(i, j - begin) = at(i, j);
    return m;
}

Mat Mat::hcat(const Mat& l, const Mat& r) {
    check_same_field(l, r);
    if (l.rows() != r.rows()) fail("DimensionMismatch", "hcat row counts differ");
    Mat m(l.field(), l.rows(), l.cols() + r.cols());
    for (std::size_t i = 0; i < l.rows(); ++i) {
        for (std::size_t j = 0; j < l.cols(); ++j) m.at(i, j) = l.at(i, j);
        for (std::size_t j = 0; j < r.cols(); ++j) m.at(i, l.cols() + j) = r.at(i, j);
    }
    return m;
}

void Mat::set_col(std::size_t j, const Mat& v) {
    if (v.rows() != rows_ || v.cols() != 1 || j >= cols_)
        fail("DimensionMismatch", "set_col shape");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Mat& m) {
    Mat r = m;
    Mat t = Mat::identity(m.field(), m.rows());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && r.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(row, j), r.at(p, j));
            for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t.at(row, j), t.at(p, j));
        }
        Scalar inv = r.at(row, col).inverse();
        for (std::size_t j = 0; j < r.cols(); ++j) r.at(row, j) = r.at(row, j) * inv;
        for (std::size_t j = 0; j < t.cols(); ++j) t.at(row, j) = t.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            Scalar c = r.at(i, col);
            for (std::size_t j = 0; j < r.cols(); ++j)
                r.at(i, j) = r.at(i, j) - c * r.at(row, j);
            for (std::size_t j = 0; j < t.cols(); ++j)
                t.at(i, j) = t.at(i, j) - c * t.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(r), std::move(t), pivots.size(), std::move(pivots)};
}

Mat kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat k(m.field(), m.cols(), free_cols.size());
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
        std::size_t fc = free_cols[idx];
        k.at(fc, idx) = Scalar::one(m.field());
        for (std::size_t pr = 0; pr < rr.rank; ++pr)
            k.at(rr.pivot_cols[pr], idx) = Scalar::zero(m.field()) - rr.R.at(pr, fc);
    }
    return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& rhs) {
    if (m.field() != rhs.field()) fail("MixedFields", "solve operands over different fields");
    if (m.rows() != rhs.rows()) fail("DimensionMismatch", "solve rhs height");
    RrefResult rr = rref(m);
    Mat y = rr.T * rhs;
    // Rows past the rank must be zero for every rhs column.
    for (std::size_t i = rr.rank; i < m.rows(); ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            if (!y.at(i, j).is_zero()) return std::nullopt;
    Mat x(m.field(), m.cols(), rhs.cols());
    for (std::size_t pr = 0; pr < rr.rank; ++pr)
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.at(rr.pivot_cols[pr], j) = y.at(pr, j);
    return x;
}

Mat inverse(const Mat& m) {
    if (!m.is_square()) fail("NonSquare", "inverse of non-square matrix");
    RrefResult rr = rref(m);
    if (rr.rank != m.rows()) fail("Singular", "inverse of singular matrix");
    return rr.T;
}

Mat congruence(const Mat& t, const Mat& a) {
    if (t.field() != a.field()) fail("MixedFields", "congruence operands over different fields");
    if (!a.is_square() || a.rows() != t.rows())
        fail("DimensionMismatch", "congruence shapes");
    return t.transpose() * a * t;
}

Scalar determinant(const Mat& m) {
    if (!m.is_square()) fail("NonSquare", "determinant of non-square matrix");
    std::size_t n = m.rows();
    const FieldDescriptor& f = m.field();
    if (n == 0) return Scalar::one(f);
    // Bareiss fraction-free elimination; every division is exact.
    Mat w = m;
    Scalar prev = Scalar::one(f);
    Scalar sign = Scalar::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && w.at(p, k).is_zero()) ++p;
            if (p == n) return Scalar::zero(f);
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = Scalar::zero(f) - sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

std::size_t rank_of(const Mat& m) { return rref(m).rank; }

}  // namespace skewpencil
