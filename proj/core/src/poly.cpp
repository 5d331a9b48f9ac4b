#include "skewpencil/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "skewpencil/errors.hpp"
#include "skewpencil/mat.hpp"

namespace skewpencil {

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const FieldDescriptor& f, std::size_t deg, const Scalar& c) {
    std::vector<Scalar> v(deg + 1, Scalar::zero(f));
    v[deg] = c;
    return Poly(f, std::move(v));
}

Poly Poly::from_int_coeffs(const FieldDescriptor& f, const std::vector<long>& asc) {
    std::vector<Scalar> v;
    v.reserve(asc.size());
    for (long x : asc) v.push_back(Scalar::from_int(f, x));
    return Poly(f, std::move(v));
}

Scalar Poly::leading() const {
    if (c_.empty()) fail("ZeroPolynomial", "leading coefficient of zero polynomial");
    return c_.back();
}

static void check_same_field(const Poly& a, const Poly& b) {
    if (a.field() != b.field()) fail("MixedFields", "polynomial operands over different fields");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(*this, o);
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
    return Poly(f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(*this, o);
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] - o.c_[i];
    return Poly(f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(*this, o);
    if (c_.empty() || o.c_.empty()) return Poly(f_);
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar::zero(f_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = v[i + j] + c_[i] * o.c_[j];
    }
    return Poly(f_, std::move(v));
}

Poly Poly::scaled(const Scalar& c) const {
    std::vector<Scalar> v = c_;
    for (auto& x : v) x = x * c;
    return Poly(f_, std::move(v));
}

Poly Poly::monic() const {
    if (c_.empty()) fail("ZeroPolynomial", "monic of zero polynomial");
    return scaled(c_.back().inverse());
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = c_.size(); d-- > 0;) {
        if (c_[d].is_zero()) continue;
        std::string cs = c_[d].str();
        bool neg = cs.size() && cs[0] == '-';
        if (first) {
            if (neg) os << "-", cs = cs.substr(1);
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        if (d == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
    if (p.field() != x.field()) fail("MixedFields", "poly_eval point over different field");
    Scalar acc = Scalar::zero(p.field());
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Poly poly_interpolate(const std::vector<std::pair<Scalar, Scalar>>& pts) {
    if (pts.empty()) fail("EmptyInput", "interpolation needs at least one point");
    const FieldDescriptor f = pts[0].first.field();
    for (const auto& [x, y] : pts)
        if (x.field() != f || y.field() != f)
            fail("MixedFields", "interpolation points over different fields");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].first == pts[j].first)
                fail("DuplicateAbscissa", "x = " + pts[i].first.str());
    // Full product, then divide out (t - x_i) for each Lagrange basis poly.
    Poly prod = Poly::constant(Scalar::one(f));
    for (const auto& [x, y] : pts) {
        Poly lin(f, {Scalar::zero(f) - x, Scalar::one(f)});
        prod = prod * lin;
    }
    Poly acc = Poly::zero(f);
    for (const auto& [x, y] : pts) {
        Poly lin(f, {Scalar::zero(f) - x, Scalar::one(f)});
        auto [q, r] = poly_divmod(prod, lin);
        if (!r.is_zero()) fail("InternalInvariantViolation", "interpolation division not exact");
        Scalar denom = poly_eval(q, x);
        acc = acc + q.scaled(y / denom);
    }
    return acc;
}

Poly derivative(const Poly& p) {
    const auto& c = p.coeffs();
    if (c.size() <= 1) return Poly::zero(p.field());
    std::vector<Scalar> v(c.size() - 1, Scalar::zero(p.field()));
    for (std::size_t i = 1; i < c.size(); ++i)
        v[i - 1] = c[i] * Scalar::from_int(p.field(), static_cast<long>(i));
    return Poly(p.field(), std::move(v));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly::zero(a.field()), a};
    const FieldDescriptor& f = a.field();
    std::vector<Scalar> rem = a.coeffs();
    std::size_t db = static_cast<std::size_t>(b.degree());
    Scalar lead_inv = b.leading().inverse();
    std::vector<Scalar> quot(rem.size() - db, Scalar::zero(f));
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        Scalar q = rem[i] * lead_inv;
        quot[i - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = rem[i - db + j] - q * b.coeffs()[j];
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Poly char_poly(const Mat& m) {
    if (!m.is_square()) fail("NonSquare", "char_poly of non-square matrix");
    const FieldDescriptor f = m.field();
    std::size_t n = m.rows();
    // Berkowitz iteration over trailing principal blocks; entirely
    // division-free, so it is valid in any characteristic.
    std::vector<Scalar> v{Scalar::one(f)};  // descending coefficients
    for (std::size_t kk = n; kk-- > 0;) {
        std::size_t s = n - kk;  // current block size
        std::vector<Scalar> colv;
        colv.reserve(s + 1);
        colv.push_back(Scalar::one(f));
        colv.push_back(Scalar::zero(f) - m.at(kk, kk));
        std::size_t t = s - 1;
        std::vector<Scalar> w(t, Scalar::zero(f));
        for (std::size_t i = 0; i < t; ++i) w[i] = m.at(kk + 1 + i, kk);
        for (std::size_t step = 0; step + 2 <= s; ++step) {
            Scalar dot = Scalar::zero(f);
            for (std::size_t j = 0; j < t; ++j) dot = dot + m.at(kk, kk + 1 + j) * w[j];
            colv.push_back(Scalar::zero(f) - dot);
            if (step + 3 <= s) {
                std::vector<Scalar> nw(t, Scalar::zero(f));
                for (std::size_t i = 0; i < t; ++i) {
                    Scalar acc = Scalar::zero(f);
                    for (std::size_t j = 0; j < t; ++j)
                        acc = acc + m.at(kk + 1 + i, kk + 1 + j) * w[j];
                    nw[i] = acc;
                }
                w = std::move(nw);
            }
        }
        std::vector<Scalar> nv(s + 1, Scalar::zero(f));
        for (std::size_t i = 0; i <= s; ++i) {
            Scalar acc = Scalar::zero(f);
            for (std::size_t j = 0; j < s && j <= i; ++j)
                acc = acc + colv[i - j] * v[j];
            nv[i] = acc;
        }
        v = std::move(nv);
    }
    std::vector<Scalar> asc(v.rbegin(), v.rend());
    return Poly(f, std::move(asc));
}

namespace {

// Trial division up to 10^6 plus a strong pseudoprime check on the cofactor.
// Returns false when the cofactor is composite and too large to factor.
bool factorize(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return true;
    for (unsigned long d = 2; d <= 1000000UL; d += (d == 2 ? 1 : 2)) {
        if (mpz_class(d) * d > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
                ++e;
            }
            out.emplace_back(mpz_class(d), e);
        }
    }
    if (n > 1) {
        if (!mpz_probab_prime_p(n.get_mpz_t(), 40)) return false;
        out.emplace_back(n, 1);
    }
    return true;
}

std::vector<mpz_class> divisors(const std::vector<std::pair<mpz_class, unsigned>>& fac) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = out.size();
        mpz_class pw = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
        }
    }
    return out;
}

std::size_t divisor_count(const std::vector<std::pair<mpz_class, unsigned>>& fac) {
    std::size_t c = 1;
    for (const auto& [p, e] : fac) c *= (e + 1);
    return c;
}

// Divides out (t - r) as often as it goes; returns the multiplicity.
std::size_t strip_root(Poly& p, const Scalar& r) {
    std::size_t mult = 0;
    Poly lin(p.field(), {Scalar::zero(p.field()) - r, Scalar::one(p.field())});
    for (;;) {
        auto [q, rem] = poly_divmod(p, lin);
        if (!rem.is_zero()) break;
        p = q;
        ++mult;
    }
    return mult;
}

}  // namespace

RootReport roots_in_field(const Poly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "root search on zero polynomial");
    const FieldDescriptor f = p.field();
    std::vector<std::pair<Scalar, std::size_t>> roots;
    Poly rem = p;

    if (f.is_prime_field()) {
        if (f.prime() > 65536)
            fail("FieldTooLargeForSearch",
                 "exhaustive root search limited to p <= 65536, got p = " +
                     std::to_string(f.prime()));
        for (std::uint64_t r = 0; r < f.prime() && rem.degree() > 0; ++r) {
            Scalar x = Scalar::residue(f, r);
            if (!poly_eval(rem, x).is_zero()) continue;
            std::size_t mult = strip_root(rem, x);
            roots.emplace_back(x, mult);
        }
        return RootReport{std::move(roots), std::move(rem), true};
    }

    // Rationals: root 0 first, then the p/q candidates of the primitive
    // integer form of the remaining polynomial.
    std::size_t val = 0;
    while (val < rem.coeffs().size() && rem.coeffs()[val].is_zero()) ++val;
    if (val > 0 && rem.degree() >= static_cast<long>(val)) {
        std::vector<Scalar> shifted(rem.coeffs().begin() + static_cast<long>(val),
                                    rem.coeffs().end());
        rem = Poly(f, std::move(shifted));
        roots.emplace_back(Scalar::zero(f), val);
    }
    if (rem.degree() > 0) {
        mpz_class den_lcm = 1;
        for (const auto& c : rem.coeffs()) {
            mpz_class d = c.rat().get_den();
            den_lcm = den_lcm / gcd(den_lcm, d) * d;
        }
        std::vector<mpz_class> ic;
        for (const auto& c : rem.coeffs()) {
            mpq_class scaled = c.rat() * mpq_class(den_lcm);
            ic.push_back(scaled.get_num());
        }
        mpz_class content = 0;
        for (const auto& z : ic) content = gcd(content, z);
        if (content > 1)
            for (auto& z : ic) z /= content;
        std::vector<std::pair<mpz_class, unsigned>> f0, fd;
        if (!factorize(ic.front(), f0) || !factorize(ic.back(), fd))
            fail("RootSearchOverflow", "coefficient factorization infeasible");
        if (divisor_count(f0) * divisor_count(fd) > 200000)
            fail("RootSearchOverflow", "too many rational root candidates");
        std::set<mpq_class> cands;
        for (const auto& dn : divisors(f0))
            for (const auto& dd : divisors(fd)) {
                mpq_class q(dn, dd);
                q.canonicalize();
                cands.insert(q);
                cands.insert(-q);
            }
        for (const auto& q : cands) {
            if (rem.degree() <= 0) break;
            Scalar x = Scalar::from_mpq(q);
            if (!poly_eval(rem, x).is_zero()) continue;
            std::size_t mult = strip_root(rem, x);
            roots.emplace_back(x, mult);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return Scalar::cmp(a.first, b.first) < 0;
    });
    return RootReport{std::move(roots), std::move(rem), true};
}

std::vector<std::size_t> squarefree_degree_hints(const Poly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "square-free hints of zero polynomial");
    std::vector<std::size_t> hints;
    if (p.degree() <= 0) return hints;
    Poly fpoly = p.monic();
    Poly d = derivative(fpoly);
    if (d.is_zero()) {
        // Derivative collapsed (only possible in small characteristic); report
        // the whole thing as one opaque component.
        hints.push_back(static_cast<std::size_t>(fpoly.degree()));
        return hints;
    }
    Poly g = poly_gcd(fpoly, d);
    Poly w = poly_divmod(fpoly, g).first;
    std::size_t i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, g);
        Poly s = poly_divmod(w, y).first;
        if (s.degree() > 0)
            for (std::size_t rep = 0; rep < i; ++rep)
                hints.push_back(static_cast<std::size_t>(s.degree()));
        w = y;
        g = poly_divmod(g, y).first;
        ++i;
    }
    if (g.degree() > 0)
        hints.push_back(static_cast<std::size_t>(g.degree()));
    std::sort(hints.begin(), hints.end());
    return hints;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) fail("ZeroPolynomial", "square-free part of zero polynomial");
    if (p.degree() <= 0) return Poly::constant(Scalar::one(p.field()));
    Poly fpoly = p.monic();
    Poly d = derivative(fpoly);
    if (d.is_zero()) return fpoly;
    Poly g = poly_gcd(fpoly, d);
    return poly_divmod(fpoly, g).first.monic();
}

}  // namespace skewpencil
