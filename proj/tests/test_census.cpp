#include <doctest.h>

#include <stdexcept>

#include <map>

#include "pglcensus/census.hpp"
#include "pglcensus/errors.hpp"

using namespace pglcensus;

namespace {

std::map<long long, long long> by_orbit(const ClassCensus& c) {
    std::map<long long, long long> out;
    for (const auto& r : c.breakdown) out[r.orbit_size] += r.num_classes;
    return out;
}

using Rows = std::map<long long, long long>;

}  // namespace

TEST_CASE("closed-form censuses match the example tables") {
    CHECK(count_closed_form(2, PrimeModulus(5)).total == 1);
    CHECK(by_orbit(count_closed_form(2, PrimeModulus(5))) == Rows{{3, 1}});
    CHECK(by_orbit(count_closed_form(2, PrimeModulus(7))) == Rows{{2, 1}, {3, 1}});
    CHECK(by_orbit(count_closed_form(2, PrimeModulus(17))) == Rows{{3, 1}, {6, 2}});
    CHECK(by_orbit(count_closed_form(2, PrimeModulus(19))) == Rows{{2, 1}, {3, 1}, {6, 2}});

    CHECK(by_orbit(count_closed_form(3, PrimeModulus(7))) == Rows{{8, 1}, {12, 1}});
    CHECK(by_orbit(count_closed_form(3, PrimeModulus(11))) == Rows{{12, 2}, {24, 2}});
    CHECK(by_orbit(count_closed_form(3, PrimeModulus(13))) ==
          Rows{{6, 1}, {8, 1}, {12, 2}, {24, 3}});
    CHECK(by_orbit(count_closed_form(3, PrimeModulus(17))) == Rows{{6, 1}, {12, 3}, {24, 7}});

    CHECK(by_orbit(count_closed_form(4, PrimeModulus(7))) == Rows{{60, 1}});
    CHECK(by_orbit(count_closed_form(4, PrimeModulus(11))) == Rows{{24, 1}, {60, 2}, {120, 3}});
    CHECK(by_orbit(count_closed_form(4, PrimeModulus(13))) == Rows{{30, 1}, {60, 2}, {120, 7}});
    CHECK(by_orbit(count_closed_form(4, PrimeModulus(41))) ==
          Rows{{24, 1}, {30, 1}, {60, 9}, {120, 452}});
    CHECK(count_closed_form(4, PrimeModulus(41)).total == 463);

    CHECK(by_orbit(count_closed_form(5, PrimeModulus(11))) ==
          Rows{{144, 1}, {360, 2}, {720, 3}});
    CHECK(by_orbit(count_closed_form(5, PrimeModulus(13))) ==
          Rows{{120, 1}, {240, 1}, {360, 3}, {720, 9}});
    CHECK(by_orbit(count_closed_form(5, PrimeModulus(17))) == Rows{{360, 7}, {720, 42}});
    CHECK(by_orbit(count_closed_form(5, PrimeModulus(31))) ==
          Rows{{120, 1}, {144, 1}, {240, 4}, {360, 30}, {720, 775}});
    CHECK(count_closed_form(5, PrimeModulus(31)).total == 811);
}

TEST_CASE("the p = k+1 specials") {
    ClassCensus c23 = count_closed_form(2, PrimeModulus(3));
    CHECK(c23.total == 1);
    CHECK(by_orbit(c23) == Rows{{1, 1}});
    ClassCensus c45 = count_closed_form(4, PrimeModulus(5));
    CHECK(c45.total == 1);
    CHECK(by_orbit(c45) == Rows{{6, 1}});
}

TEST_CASE("closed form rejects out-of-range input") {
    CHECK_THROWS_AS(count_closed_form(3, PrimeModulus(3)), std::domain_error);
    CHECK_THROWS_AS(count_closed_form(6, PrimeModulus(11)), std::domain_error);
}

TEST_CASE("mass formula for the closed form") {
    for (unsigned k = 2; k <= 5; ++k)
        for (long p = k + 2; p <= 31; ++p) {
            if (!is_prime(p)) continue;
            long long mass = 0;
            for (const auto& r : count_closed_form(k, PrimeModulus(p)).breakdown)
                mass += r.num_classes * r.orbit_size;
            CHECK(mass == static_cast<long long>(falling_factorial(p - 2, k - 1)));
        }
}

TEST_CASE("brute-force censuses for the worked cases") {
    CHECK(by_orbit(count_brute_force(3, PrimeModulus(11))) == Rows{{12, 2}, {24, 2}});
    CHECK(by_orbit(count_brute_force(2, PrimeModulus(5))) == Rows{{3, 1}});
    CHECK(by_orbit(count_brute_force(5, PrimeModulus(7))) == Rows{{120, 1}});
}

TEST_CASE("duality totals reproduce the p < k+1 table") {
    // one representative k per (p, a) residue row
    auto dual = [](long p, long a) {
        unsigned k = static_cast<unsigned>(p + a - 1);  // (k+1) = p + a
        return count_duality(k, PrimeModulus(p)).total;
    };
    for (long a = 0; a < 5; ++a) CHECK(dual(5, a) == 1);
    for (long a : {0L, 1L, 2L, 5L, 6L}) CHECK(dual(7, a) == 1);
    for (long a : {3L, 4L}) CHECK(dual(7, a) == 2);
    for (long a : {0L, 1L, 2L, 9L, 10L}) CHECK(dual(11, a) == 1);
    for (long a : {3L, 8L}) CHECK(dual(11, a) == 2);
    for (long a : {4L, 7L}) CHECK(dual(11, a) == 4);
    for (long a : {5L, 6L}) CHECK(dual(11, a) == 6);
    for (long a : {0L, 1L, 2L, 11L, 12L}) CHECK(dual(13, a) == 1);
    for (long a : {3L, 10L}) CHECK(dual(13, a) == 3);
    for (long a : {4L, 9L}) CHECK(dual(13, a) == 7);
    for (long a : {5L, 8L}) CHECK(dual(13, a) == 10);
    for (long a : {6L, 7L}) CHECK(dual(13, a) == 14);
}

TEST_CASE("duality at p = 19 reproduces the degree ladder") {
    const std::map<long, long long> expected{{19, 1}, {18, 1}, {17, 1}, {16, 4},
                                             {15, 14}, {14, 36}, {13, 86}};
    for (auto [k1, total] : expected)
        CHECK(count_duality(static_cast<unsigned>(k1 - 1), PrimeModulus(19)).total == total);
}

TEST_CASE("duality is symmetric in a and p-a") {
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) {
        for (long a = 2; a <= p - 2; ++a) {
            if (std::min(a, p - a) > 6) continue;  // outside the supported base cases
            long long left = count_duality(static_cast<unsigned>(p + a - 1), PrimeModulus(p)).total;
            long long right =
                count_duality(static_cast<unsigned>(p + (p - a) - 1), PrimeModulus(p)).total;
            CHECK(left == right);
        }
    }
}

TEST_CASE("duality reports unsupported reductions honestly") {
    // p = 17, k+1 = 24: a = 7 and p - a = 10, both beyond PGL_6
    CHECK_THROWS_AS(count_duality(23, PrimeModulus(17)), UnsupportedError);
}

TEST_CASE("projective representation counts") {
    CHECK(projective_rep_count(9, PrimeModulus(7)) == 5);   // k+1 = 10, a = 3
    CHECK(projective_rep_count(9, PrimeModulus(5)) == 1);   // k+1 = 10, a = 0
    CHECK(projective_rep_count(7, PrimeModulus(7)) == 1);   // k+1 = 8, a = 1
    CHECK(projective_rep_count(10, PrimeModulus(7)) == 5);  // a = 4: C(6,3)/4 = 5
    CHECK_THROWS_AS(projective_rep_count(2, PrimeModulus(7)), std::domain_error);
}

TEST_CASE("reconcile agrees on the sampled cases") {
    CHECK(reconcile(3, PrimeModulus(17)).equal);
    CHECK(reconcile(3, PrimeModulus(17)).expected.total == 11);
    auto r513 = reconcile(5, PrimeModulus(13));
    CHECK(r513.equal);
    CHECK(r513.expected.total == 14);
    CHECK(reconcile(2, PrimeModulus(3)).equal);
}

TEST_CASE("census serialization fields") {
    ClassCensus c = count_closed_form(3, PrimeModulus(11));
    CHECK(census_method_name(c.method) == "closed_form");
    CHECK(c.has_breakdown);
    CHECK(c.k == 3);
    CHECK(c.p == 11);
}
