#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "skewpencil/field.hpp"

namespace skewpencil {

class Mat;

// Dense univariate polynomial, coefficients in ascending degree order with no
// trailing zeros. The zero polynomial has an empty coefficient list and
// degree() == -1.
class Poly {
public:
    explicit Poly(FieldDescriptor f) : f_(f) {}
    Poly(FieldDescriptor f, std::vector<Scalar> coeffs)
        : f_(f), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(const FieldDescriptor& f) { return Poly(f); }
    static Poly constant(const Scalar& c) { return Poly(c.field(), {c}); }
    static Poly monomial(const FieldDescriptor& f, std::size_t deg, const Scalar& c);
    static Poly from_int_coeffs(const FieldDescriptor& f, const std::vector<long>& asc);

    const FieldDescriptor& field() const { return f_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Scalar::zero(f_);
    }
    Scalar leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Scalar& c) const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;  // ZeroPolynomial on zero input
    std::string str() const;

private:
    void normalize();
    FieldDescriptor f_;
    std::vector<Scalar> c_;
};

Scalar poly_eval(const Poly& p, const Scalar& x);

// Lagrange interpolation through the given (x, y) points.
Poly poly_interpolate(const std::vector<std::pair<Scalar, Scalar>>& pts);
// errors: EmptyInput, DuplicateAbscissa, MixedFields

Poly derivative(const Poly& p);

// Euclidean division: returns (quotient, remainder). DivisionByZero on zero
// divisor.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) == 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Division-free characteristic polynomial det(tI - M), Berkowitz iteration.
Poly char_poly(const Mat& m);  // NonSquare

struct RootReport {
    // (root, multiplicity) with roots in canonical scalar order.
    std::vector<std::pair<Scalar, std::size_t>> roots;
    Poly remainder;     // p with all found linear factors divided out
    bool complete;      // true when the remainder provably has no roots here
};

// All roots of p that lie in its coefficient field. Over the rationals this
// enumerates candidate p/q from divisors of the outer coefficients; over a
// prime field it evaluates exhaustively (FieldTooLargeForSearch beyond 2^16,
// RootSearchOverflow if rational coefficient factorization is infeasible).
RootReport roots_in_field(const Poly& p);  // ZeroPolynomial

// Degrees of the square-free parts, each listed with its multiplicity, e.g.
// (t^2-2)^2 gives {2, 2}. Used only for diagnostics.
std::vector<std::size_t> squarefree_degree_hints(const Poly& p);

// Square-free core: product of the distinct irreducible factors, monic.
Poly squarefree_part(const Poly& p);

}  // namespace skewpencil
