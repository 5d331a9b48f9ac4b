#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "skewpencil/errors.hpp"

namespace skewpencil {

// Coefficient field: the rationals, or F_p for an odd prime p.
// Characteristic 2 is rejected at construction (the canonical form needs 1/2).
class FieldDescriptor {
public:
    static FieldDescriptor rationals() { return FieldDescriptor(0); }
    static FieldDescriptor prime_field(std::uint64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }
    std::uint64_t prime() const;

    bool operator==(const FieldDescriptor& o) const { return p_ == o.p_; }
    bool operator!=(const FieldDescriptor& o) const { return p_ != o.p_; }

    std::string describe() const;

private:
    explicit FieldDescriptor(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;  // 0 encodes the rationals
};

// Exact field element. Over Q a reduced fraction with positive denominator,
// over F_p a residue in [0, p). Every operation keeps the value canonical.
class Scalar {
public:
    Scalar() : f_(FieldDescriptor::rationals()), q_(0) {}

    static Scalar zero(const FieldDescriptor& f);
    static Scalar one(const FieldDescriptor& f);
    static Scalar from_int(const FieldDescriptor& f, long v);
    static Scalar from_mpq(const mpq_class& q);             // rationals
    static Scalar residue(const FieldDescriptor& f, std::uint64_t r);  // prime fields

    // Text form: "num" or "num/den" (den > 0) over Q, decimal residue over F_p.
    static Scalar parse(const FieldDescriptor& f, const std::string& text);
    std::string str() const;

    const FieldDescriptor& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero
    Scalar inverse() const;                   // DivisionByZero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Total order used for canonical block sorting: numerator then denominator
    // over Q, residue order over F_p. Returns <0, 0, >0.
    static int cmp(const Scalar& a, const Scalar& b);

    const mpq_class& rat() const;   // rationals only
    std::uint64_t res() const;      // prime fields only

private:
    Scalar(FieldDescriptor f, mpq_class q) : f_(f), q_(std::move(q)) {}
    Scalar(FieldDescriptor f, std::uint64_t r) : f_(f), q_(0), r_(r) {}
    void check_same_field(const Scalar& o) const;

    FieldDescriptor f_;
    mpq_class q_;          // used over Q
    std::uint64_t r_ = 0;  // used over F_p
};

// Canonical strict-weak-order functor (for std::map keys and sorting).
struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return Scalar::cmp(a, b) < 0; }
};

}  // namespace skewpencil
