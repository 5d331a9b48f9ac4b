#include "skewpencil/field.hpp"

#include <cctype>

namespace skewpencil {

namespace {

bool is_prime_u64(std::uint64_t p) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) fail("DivisionByZero", "inverse of zero residue");
    // extended Euclid; coefficients stay below p, so __int128 is ample
    __int128 t = 0, newt = 1;
    __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<__int128>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
    if (p == 2) fail("CharTwoField", "prime fields of characteristic 2 are not supported");
    if (p < 2 || !is_prime_u64(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    return FieldDescriptor(p);
}

std::uint64_t FieldDescriptor::prime() const {
    if (p_ == 0) fail("InternalInvariantViolation", "prime() called on the rational field");
    return p_;
}

std::string FieldDescriptor::describe() const {
    return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldDescriptor& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const FieldDescriptor& f) {
    return f.is_rationals() ? Scalar(f, mpq_class(1)) : Scalar(f, std::uint64_t{1});
}

Scalar Scalar::from_int(const FieldDescriptor& f, long v) {
    if (f.is_rationals()) return Scalar(f, mpq_class(v));
    std::uint64_t p = f.prime();
    long long r = static_cast<long long>(v) % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_mpq(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(FieldDescriptor::rationals(), c);
}

Scalar Scalar::residue(const FieldDescriptor& f, std::uint64_t r) {
    return Scalar(f, r % f.prime());
}

Scalar Scalar::parse(const FieldDescriptor& f, const std::string& text) {
    auto bad = [&]() -> void {
        fail("Parse", "invalid scalar literal '" + text + "' for " + f.describe());
    };
    if (text.empty()) bad();
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') {
        neg = true;
        ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) bad();
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    std::string num = text.substr(num_begin, i - num_begin);
    std::string den;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) bad();
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        den = text.substr(den_begin, i - den_begin);
    }
    if (i != text.size()) bad();

    if (f.is_prime_field()) {
        if (!den.empty() || neg) bad();  // residues are plain decimal
        mpz_class z(num);
        mpz_class p(static_cast<unsigned long>(f.prime()));
        mpz_class r = z % p;
        return Scalar(f, static_cast<std::uint64_t>(r.get_ui()));
    }
    mpz_class n(num);
    if (neg) n = -n;
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den);
    if (d == 0) fail("Parse", "zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Scalar(f, q);
}

std::string Scalar::str() const {
    if (f_.is_rationals()) return q_.get_str();
    return std::to_string(r_);
}

bool Scalar::is_zero() const { return f_.is_rationals() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return f_.is_rationals() ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (f_ != o.f_)
        fail("MixedFields", "operands from " + f_.describe() + " and " + o.f_.describe());
}

Scalar Scalar::operator-() const {
    if (f_.is_rationals()) return Scalar(f_, mpq_class(-q_));
    return Scalar(f_, r_ == 0 ? 0 : f_.prime() - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (f_.is_rationals()) return Scalar(f_, mpq_class(q_ + o.q_));
    std::uint64_t p = f_.prime();
    std::uint64_t s = r_ + o.r_;  // p < 2^63 not assumed: guard via comparison
    if (s < r_ || s >= p) s -= p;
    return Scalar(f_, s);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (f_.is_rationals()) return Scalar(f_, mpq_class(q_ * o.q_));
    return Scalar(f_, mulmod(r_, o.r_, f_.prime()));
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    if (f_.is_rationals()) return Scalar(f_, mpq_class(1 / q_));
    return Scalar(f_, invmod(r_, f_.prime()));
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) fail("DivisionByZero", "division by zero");
    if (f_.is_rationals()) return Scalar(f_, mpq_class(q_ / o.q_));
    return Scalar(f_, mulmod(r_, invmod(o.r_, f_.prime()), f_.prime()));
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return f_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    if (a.f_.is_rationals()) {
        int c = mpz_cmp(a.q_.get_num().get_mpz_t(), b.q_.get_num().get_mpz_t());
        if (c != 0) return c;
        return mpz_cmp(a.q_.get_den().get_mpz_t(), b.q_.get_den().get_mpz_t());
    }
    if (a.r_ < b.r_) return -1;
    return a.r_ > b.r_ ? 1 : 0;
}

const mpq_class& Scalar::rat() const {
    if (!f_.is_rationals())
        fail("InternalInvariantViolation", "rat() called on a prime-field scalar");
    return q_;
}

std::uint64_t Scalar::res() const {
    if (!f_.is_prime_field())
        fail("InternalInvariantViolation", "res() called on a rational scalar");
    return r_;
}

}  // namespace skewpencil
