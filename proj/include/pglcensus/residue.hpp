#ifndef PGLCENSUS_RESIDUE_HPP
#define PGLCENSUS_RESIDUE_HPP

#include <cstdint>
#include <set>
#include <vector>

namespace pglcensus {

bool is_prime(long n);

// A prime modulus p >= 2 together with arithmetic in Z_p.  Values are
// immutable; all operations are pure.
class PrimeModulus {
public:
    // Throws std::domain_error unless p passes a deterministic
    // primality test.
    explicit PrimeModulus(long p);

    long value() const { return p_; }

    long reduce(long a) const;                 // representative in 0..p-1
    long add(long a, long b) const { return reduce(a + b); }
    long sub(long a, long b) const { return reduce(a - b); }
    long mul(long a, long b) const { return reduce(reduce(a) * reduce(b)); }
    long neg(long a) const { return reduce(-a); }
    long pow(long a, long e) const;            // e >= 0
    long inv(long a) const;                    // throws on a == 0 (mod p)

    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }

private:
    long p_;
};

// n * (n-1) * ... * (n-r+1); the number of r-permutations of n objects.
// Returns 1 for r == 0.  Throws std::domain_error if r > n or on overflow.
unsigned long long falling_factorial(unsigned long long n, unsigned long long r);

unsigned long long factorial(unsigned n);

// binomial(n, r) without overflow for the sizes used here.
unsigned long long binomial(unsigned long long n, unsigned long long r);

// Euler's totient, by trial-division factoring.
unsigned long euler_phi(unsigned long n);

// All x in 1..p-1 with x^r = 1 (mod p); with primitive_only, only the
// x of exact multiplicative order r.
std::set<long> roots_of_unity_mod_p(long r, const PrimeModulus& p, bool primitive_only);

// Roots in 0..p-1 of the polynomial with coefficient sequence poly
// (poly[i] multiplies x^i), found by exhaustive evaluation.  Throws
// std::domain_error if the polynomial vanishes identically mod p.
std::set<long> solve_univariate_congruence(const std::vector<long>& poly, const PrimeModulus& p);

}  // namespace pglcensus

#endif
