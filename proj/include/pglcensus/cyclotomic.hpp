#ifndef PGLCENSUS_CYCLOTOMIC_HPP
#define PGLCENSUS_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pglcensus {

// Exact rational; GMP keeps these in lowest terms with positive
// denominator, which is the canonical form assumed everywhere.
using Rat = mpq_class;

Rat rat(long num, long den = 1);
std::string rat_to_string(const Rat& x);

class CyclotomicNumber;

// Q(zeta_n), elements represented by rational coefficient vectors of
// length phi(n) reduced modulo the n-th cyclotomic polynomial.  The
// polynomial is computed once at construction (by peeling the
// cyclotomic factors of x^n - 1 for the proper divisors of n) and
// cached in the instance.  Order 1 gives plain Q.
class CyclotomicField {
public:
    explicit CyclotomicField(unsigned order);

    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }

    // Monic, coefficients of x^0 .. x^degree.
    const std::vector<Rat>& cyclotomic_polynomial() const { return phi_; }

    CyclotomicNumber zero() const;
    CyclotomicNumber one() const;
    CyclotomicNumber from_rational(const Rat& x) const;
    CyclotomicNumber zeta(long power = 1) const;  // zeta_n^power, any integer power
    // Coefficients of 1, zeta, ..., zeta^{m-1} for any m; reduced.
    CyclotomicNumber from_coeffs(const std::vector<Rat>& coeffs) const;

private:
    unsigned order_;
    unsigned degree_;
    std::vector<Rat> phi_;
};

class CyclotomicNumber {
public:
    CyclotomicNumber() : field_(nullptr) {}

    const CyclotomicField& field() const;
    unsigned order() const;
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // The rational value if the element lies in Q, else nullptr-like
    // behaviour via the bool.
    bool as_rational(Rat& out) const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

    CyclotomicNumber inverse() const;  // throws std::domain_error on zero

    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    friend class CyclotomicField;
    CyclotomicNumber(const CyclotomicField* f, std::vector<Rat> c)
        : field_(f), c_(std::move(c)) {}

    void check_same_field(const CyclotomicNumber& o) const;

    const CyclotomicField* field_;
    std::vector<Rat> c_;
};

// Names matching the operation vocabulary used elsewhere in the project.
inline CyclotomicNumber cyclo_add(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + b; }
inline CyclotomicNumber cyclo_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a * b; }
inline CyclotomicNumber cyclo_inv(const CyclotomicNumber& a) { return a.inverse(); }
inline bool cyclo_is_zero(const CyclotomicNumber& a) { return a.is_zero(); }

}  // namespace pglcensus

#endif
