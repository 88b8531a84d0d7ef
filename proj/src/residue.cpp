#include "pglcensus/residue.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace pglcensus {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(long p) : p_(p) {
    if (!is_prime(p))
        throw std::domain_error("PrimeModulus: " + std::to_string(p) + " is not prime");
}

long PrimeModulus::reduce(long a) const {
    long r = a % p_;
    return r < 0 ? r + p_ : r;
}

long PrimeModulus::pow(long a, long e) const {
    if (e < 0) throw std::domain_error("PrimeModulus::pow: negative exponent");
    long base = reduce(a);
    long acc = 1;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

long PrimeModulus::inv(long a) const {
    long r = reduce(a);
    if (r == 0) throw std::domain_error("PrimeModulus::inv: zero has no inverse");
    return pow(r, p_ - 2);
}

unsigned long long falling_factorial(unsigned long long n, unsigned long long r) {
    if (r > n)
        throw std::domain_error("falling_factorial: r > n");
    unsigned long long acc = 1;
    for (unsigned long long i = 0; i < r; ++i) {
        unsigned long long f = n - i;
        if (f != 0 && acc > std::numeric_limits<unsigned long long>::max() / f)
            throw std::domain_error("falling_factorial: overflow");
        acc *= f;
    }
    return acc;
}

unsigned long long factorial(unsigned n) {
    return falling_factorial(n, n);
}

unsigned long long binomial(unsigned long long n, unsigned long long r) {
    if (r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned long long acc = 1;
    for (unsigned long long i = 1; i <= r; ++i) {
        // exact at each step: acc holds binomial(n - r + i - 1, i - 1) * ...
        acc = acc * (n - r + i) / i;
    }
    return acc;
}

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    unsigned long m = n;
    for (unsigned long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::set<long> roots_of_unity_mod_p(long r, const PrimeModulus& p, bool primitive_only) {
    if (r < 1) throw std::domain_error("roots_of_unity_mod_p: r must be >= 1");
    std::set<long> out;
    for (long x = 1; x < p.value(); ++x) {
        if (p.pow(x, r) != 1) continue;
        if (primitive_only) {
            bool exact = true;
            for (long d = 1; d < r; ++d) {
                if (r % d == 0 && p.pow(x, d) == 1) { exact = false; break; }
            }
            if (!exact) continue;
        }
        out.insert(x);
    }
    return out;
}

std::set<long> solve_univariate_congruence(const std::vector<long>& poly, const PrimeModulus& p) {
    bool nonzero = false;
    for (long c : poly)
        if (p.reduce(c) != 0) { nonzero = true; break; }
    if (!nonzero)
        throw std::domain_error("solve_univariate_congruence: zero polynomial");
    std::set<long> roots;
    for (long x = 0; x < p.value(); ++x) {
        long v = 0;
        for (size_t i = poly.size(); i-- > 0;)
            v = p.add(p.mul(v, x), poly[i]);
        if (v == 0) roots.insert(x);
    }
    return roots;
}

}  // namespace pglcensus
