#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>

#include "pglcensus/cyclotomic.hpp"

using namespace pglcensus;

namespace {

std::vector<long> poly_longs(const std::vector<Rat>& p) {
    std::vector<long> out;
    for (const Rat& c : p) {
        REQUIRE(c.get_den() == 1);
        out.push_back(static_cast<long>(c.get_num().get_si()));
    }
    return out;
}

CyclotomicNumber random_element(const CyclotomicField& f, std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rat> cs(f.degree());
    for (auto& c : cs) c = rat(num(rng), den(rng));
    return f.from_coeffs(cs);
}

}  // namespace

TEST_CASE("cyclotomic polynomials for small orders") {
    CHECK(poly_longs(CyclotomicField(1).cyclotomic_polynomial()) == std::vector<long>{-1, 1});
    CHECK(poly_longs(CyclotomicField(2).cyclotomic_polynomial()) == std::vector<long>{1, 1});
    CHECK(poly_longs(CyclotomicField(3).cyclotomic_polynomial()) == std::vector<long>{1, 1, 1});
    CHECK(poly_longs(CyclotomicField(4).cyclotomic_polynomial()) == std::vector<long>{1, 0, 1});
    CHECK(poly_longs(CyclotomicField(6).cyclotomic_polynomial()) == std::vector<long>{1, -1, 1});
    CHECK(poly_longs(CyclotomicField(8).cyclotomic_polynomial()) ==
          std::vector<long>{1, 0, 0, 0, 1});
    CHECK(poly_longs(CyclotomicField(12).cyclotomic_polynomial()) ==
          std::vector<long>{1, 0, -1, 0, 1});
    CHECK(CyclotomicField(11).degree() == 10);
    CHECK(CyclotomicField(1).degree() == 1);
}

TEST_CASE("vanishing sum of all p-th roots") {
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        CyclotomicField f(p);
        CyclotomicNumber s = f.zero();
        for (unsigned j = 0; j < p; ++j) s += f.zeta(j);
        CHECK(cyclo_is_zero(s));
    }
}

TEST_CASE("zeta_8 + zeta_8^7 squares to 2") {
    CyclotomicField f(8);
    CyclotomicNumber sqrt2 = f.zeta(1) + f.zeta(7);
    CHECK(sqrt2 * sqrt2 == f.from_rational(rat(2)));
}

TEST_CASE("inverse of one and inversion errors") {
    CyclotomicField f(5);
    CHECK(cyclo_inv(f.one()) == f.one());
    CHECK_THROWS_AS(cyclo_inv(f.zero()), std::domain_error);
    CyclotomicField g(3);
    CHECK_THROWS_AS(f.one() + g.one(), std::domain_error);
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(20240811);
    for (unsigned n : {3u, 4u, 5u, 8u, 11u}) {
        CyclotomicField f(n);
        for (int trial = 0; trial < 20; ++trial) {
            CyclotomicNumber a = random_element(f, rng);
            CyclotomicNumber b = random_element(f, rng);
            CyclotomicNumber c = random_element(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
        }
    }
}

TEST_CASE("root-of-unity sums vanish exactly for balanced residue multisets") {
    std::mt19937 rng(7);
    for (long p : {5L, 7L}) {
        CyclotomicField f(static_cast<unsigned>(p));
        std::uniform_int_distribution<int> count(0, 3);
        for (int trial = 0; trial < 60; ++trial) {
            std::map<long, int> multiset;
            for (long r = 0; r < p; ++r) multiset[r] = count(rng);
            CyclotomicNumber s = f.zero();
            for (auto [r, c] : multiset)
                for (int i = 0; i < c; ++i) s += f.zeta(r);
            bool balanced = true;
            for (long r = 1; r < p; ++r)
                if (multiset[r] != multiset[0]) balanced = false;
            CHECK(cyclo_is_zero(s) == balanced);
        }
    }
}

TEST_CASE("rationals embed at order 1") {
    CyclotomicField q(1);
    CyclotomicNumber x = q.from_rational(rat(3, 4));
    CyclotomicNumber y = q.from_rational(rat(-7, 2));
    Rat value;
    CHECK((x * y).as_rational(value));
    CHECK(value == rat(-21, 8));
    CHECK(q.zeta(0) == q.one());
}
