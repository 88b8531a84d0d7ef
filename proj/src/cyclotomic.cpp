#include "pglcensus/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace pglcensus {

Rat rat(long num, long den) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat x(num, den);
    x.canonicalize();
    return x;
}

std::string rat_to_string(const Rat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

namespace {

using Poly = std::vector<Rat>;  // coefficients of x^0 .. x^deg

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

// Remainder and quotient of a by b (b non-zero).
void poly_divmod(Poly a, const Poly& b, Poly& quot, Poly& rem) {
    poly_trim(a);
    Poly d = b;
    poly_trim(d);
    if (d.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    if (a.size() < d.size()) {
        quot = {};
        rem = std::move(a);
        return;
    }
    quot.assign(a.size() - d.size() + 1, Rat(0));
    for (size_t shift = quot.size(); shift-- > 0;) {
        Rat f = a[shift + d.size() - 1] / d.back();
        if (f == 0) continue;
        quot[shift] = f;
        for (size_t i = 0; i < d.size(); ++i)
            a[shift + i] -= f * d[i];
    }
    poly_trim(a);
    poly_trim(quot);
    rem = std::move(a);
}

Poly cyclotomic_poly(unsigned n) {
    // x^n - 1 divided by the cyclotomic polynomials of the proper
    // divisors of n.
    Poly num(n + 1, Rat(0));
    num[0] = Rat(-1);
    num[n] = Rat(1);
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        Poly q, r;
        poly_divmod(num, cyclotomic_poly(d), q, r);
        if (!r.empty())
            throw std::logic_error("cyclotomic_poly: non-exact division");
        num = std::move(q);
    }
    return num;
}

// Reduce p modulo the monic polynomial m in place.
void poly_reduce(Poly& p, const Poly& m) {
    size_t deg_m = m.size() - 1;
    while (true) {
        poly_trim(p);
        if (p.size() <= deg_m) break;
        Rat f = p.back();
        size_t shift = p.size() - 1 - deg_m;
        for (size_t i = 0; i < m.size(); ++i)
            p[shift + i] -= f * m[i];
    }
}

}  // namespace

CyclotomicField::CyclotomicField(unsigned order) : order_(order) {
    if (order < 1) throw std::domain_error("CyclotomicField: order must be >= 1");
    phi_ = cyclotomic_poly(order);
    degree_ = static_cast<unsigned>(phi_.size() - 1);
}

CyclotomicNumber CyclotomicField::zero() const {
    return CyclotomicNumber(this, std::vector<Rat>(degree_, Rat(0)));
}

CyclotomicNumber CyclotomicField::one() const {
    return from_rational(Rat(1));
}

CyclotomicNumber CyclotomicField::from_rational(const Rat& x) const {
    std::vector<Rat> c(degree_, Rat(0));
    if (degree_ == 0)
        throw std::logic_error("CyclotomicField: degenerate field");
    c[0] = x;
    // Order 1: the ring is Q[x]/(x-1), still one coefficient.
    return CyclotomicNumber(this, std::move(c));
}

CyclotomicNumber CyclotomicField::zeta(long power) const {
    long e = power % static_cast<long>(order_);
    if (e < 0) e += order_;
    std::vector<Rat> raw(static_cast<size_t>(e) + 1, Rat(0));
    raw[static_cast<size_t>(e)] = Rat(1);
    return from_coeffs(raw);
}

CyclotomicNumber CyclotomicField::from_coeffs(const std::vector<Rat>& coeffs) const {
    Poly p = coeffs;
    poly_reduce(p, phi_);
    p.resize(degree_, Rat(0));
    return CyclotomicNumber(this, std::move(p));
}

const CyclotomicField& CyclotomicNumber::field() const {
    if (!field_) throw std::logic_error("CyclotomicNumber: default-constructed value used");
    return *field_;
}

unsigned CyclotomicNumber::order() const { return field().order(); }

bool CyclotomicNumber::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CyclotomicNumber::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool CyclotomicNumber::as_rational(Rat& out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    out = c_.empty() ? Rat(0) : c_[0];
    return true;
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const {
    if (!field_ || !o.field_ || field_->order() != o.field_->order())
        throw std::domain_error("CyclotomicNumber: mismatched cyclotomic orders");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (Rat& x : r.c_) x = -x;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    check_same_field(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    check_same_field(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    check_same_field(o);
    Poly prod(c_.size() + o.c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    poly_reduce(prod, field_->cyclotomic_polynomial());
    prod.resize(field_->degree(), Rat(0));
    c_ = std::move(prod);
    return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero())
        throw std::domain_error("CyclotomicNumber: inverse of zero");
    // Extended Euclid in Q[x] against the cyclotomic polynomial, which
    // is irreducible, so the gcd is a non-zero constant.
    Poly r0 = field_->cyclotomic_polynomial();
    Poly r1 = c_;
    poly_trim(r1);
    Poly s0 = {};            // coefficient of this in r0
    Poly s1 = {Rat(1)};      // coefficient of this in r1
    while (r1.size() > 1) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly qs = poly_mul(q, s1);
        Poly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly_trim(s2);
        r0 = std::move(r1);
        s0 = std::move(s1);
        r1 = std::move(r);
        s1 = std::move(s2);
    }
    if (r1.empty())
        throw std::logic_error("CyclotomicNumber: gcd with irreducible modulus vanished");
    Rat g = r1[0];
    for (Rat& x : s1) x /= g;
    return field_->from_coeffs(s1);
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    check_same_field(o);
    return c_ == o.c_;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

}  // namespace pglcensus
