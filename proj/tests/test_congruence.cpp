#include <doctest.h>

#include <stdexcept>

#include <random>

#include "pglcensus/congruence.hpp"
#include "pglcensus/errors.hpp"

using namespace pglcensus;

namespace {

std::set<ResidueVector> solution_vectors(const CongruenceSolutionSet& s) {
    std::set<ResidueVector> out;
    for (const auto& iv : s.solutions) out.insert(iv.entries);
    return out;
}

}  // namespace

TEST_CASE("the (13) transposition pins s = 2 at k = 2") {
    for (long p : {5L, 7L, 11L, 13L}) {
        auto s = stabilizer_solutions(Permutation::from_cycles("(13)", 3), 2, PrimeModulus(p));
        CHECK(solution_vectors(s) == std::set<ResidueVector>{{2, 1, 0}});
    }
}

TEST_CASE("solution counts match the worked cases") {
    CHECK(stabilizer_solutions(Permutation::from_cycles("(13)(24)", 4), 3, PrimeModulus(11))
              .solutions.size() == 8);
    auto s = stabilizer_solutions(Permutation::from_cycles("(123)", 3), 2, PrimeModulus(7));
    CHECK(solution_vectors(s) == std::set<ResidueVector>{{3, 1, 0}, {5, 1, 0}});
    CHECK(stabilizer_solutions(Permutation::from_cycles("(14)(25)(36)", 6), 5, PrimeModulus(7))
              .solutions.size() == 8);
}

TEST_CASE("scaling witnesses verify entrywise") {
    auto s = stabilizer_solutions(Permutation::from_cycles("(1234)", 4), 3, PrimeModulus(13));
    PrimeModulus p(13);
    REQUIRE(s.solutions.size() == 2);
    for (const auto& iv : s.solutions) {
        auto [m, c] = s.scaling_witnesses.at(iv.entries);
        for (unsigned i = 0; i < 4; ++i) {
            unsigned pre = s.sigma.preimage(i);
            CHECK(iv.entries[pre] == p.add(p.mul(m, iv.entries[i]), c));
        }
    }
}

TEST_CASE("closed-form counts match the exhaustive solver") {
    struct Row { const char* label; unsigned k; };
    const std::vector<Row> rows = {
        {"transposition", 2}, {"3cycle", 2},
        {"transposition", 3}, {"2x2", 3}, {"3cycle", 3}, {"4cycle", 3},
        {"transposition", 4}, {"3cycle", 4}, {"2x2", 4}, {"4cycle", 4}, {"5cycle", 4},
        {"transposition", 5}, {"2x2", 5}, {"2x2x2", 5}, {"3x3", 5}, {"5cycle", 5}, {"6cycle", 5},
    };
    for (const auto& row : rows) {
        for (long p : {5L, 7L, 11L, 13L, 17L, 19L}) {
            if (p < static_cast<long>(row.k + 1)) continue;
            PrimeModulus pm(p);
            auto formula = solution_count_formula(row.label, row.k, pm);
            REQUIRE(formula.has_value());
            auto solved =
                stabilizer_solutions(representative_of_label(row.label, row.k), row.k, pm);
            CHECK(*formula == static_cast<long>(solved.solutions.size()));
        }
    }
    CHECK_THROWS_AS(solution_count_formula("7cycle", 5, PrimeModulus(11)), UnsupportedError);
    CHECK_THROWS_AS(solution_count_formula("3x3", 4, PrimeModulus(11)), UnsupportedError);
}

TEST_CASE("solution counts are class functions") {
    // exhaustive conjugation at k <= 4, sampled at k = 5
    for (auto [label, k, p] : std::vector<std::tuple<std::string, unsigned, long>>{
             {"3cycle", 2, 7}, {"2x2", 3, 11}, {"4cycle", 3, 13}, {"2x2", 4, 11}}) {
        PrimeModulus pm(p);
        Permutation sigma = representative_of_label(label, k);
        size_t expected = stabilizer_solutions(sigma, k, pm).solutions.size();
        for (const auto& tau : symmetric_group(k + 1)) {
            Permutation conj = tau * sigma * tau.inverse();
            CHECK(stabilizer_solutions(conj, k, pm).solutions.size() == expected);
        }
    }
    std::mt19937 rng(3);
    auto s6 = symmetric_group(6);
    std::uniform_int_distribution<size_t> pick(0, s6.size() - 1);
    PrimeModulus p13(13);
    Permutation sigma = representative_of_label("2x2x2", 5);
    size_t expected = stabilizer_solutions(sigma, 5, p13).solutions.size();
    for (int trial = 0; trial < 6; ++trial) {
        const Permutation& tau = s6[pick(rng)];
        CHECK(stabilizer_solutions(tau * sigma * tau.inverse(), 5, p13).solutions.size() ==
              expected);
    }
}

TEST_CASE("solutions of a permutation persist for its powers") {
    PrimeModulus p13(13);
    auto four = stabilizer_solutions(Permutation::from_cycles("(1234)", 4), 3, p13);
    auto square =
        stabilizer_solutions(Permutation::from_cycles("(13)(24)", 4), 3, p13);
    auto four_set = solution_vectors(four);
    auto square_set = solution_vectors(square);
    for (const auto& v : four_set) CHECK(square_set.count(v) == 1);

    PrimeModulus p7(7);
    auto six = stabilizer_solutions(Permutation::from_cycles("(123456)", 6), 5, p7);
    auto cube = stabilizer_solutions(Permutation::from_cycles("(14)(25)(36)", 6), 5, p7);
    auto six_set = solution_vectors(six);
    auto cube_set = solution_vectors(cube);
    CHECK(!six_set.empty());
    for (const auto& v : six_set) CHECK(cube_set.count(v) == 1);
}

TEST_CASE("overlaps between solution sets") {
    // 4-cycle solutions sit inside the (13)(24) pool at p = 13
    auto ov = overlap(Permutation::from_cycles("(1234)", 4),
                      Permutation::from_cycles("(13)(24)", 4), 3, PrimeModulus(13));
    std::set<ResidueVector> got;
    for (const auto& iv : ov) got.insert(iv.entries);
    CHECK(got == std::set<ResidueVector>{{5, 6, 1, 0}, {8, 9, 1, 0}});

    // distinct 2x2 involutions never share admissible solutions
    for (long p : {5L, 7L, 11L, 13L})
        CHECK(overlap(Permutation::from_cycles("(12)(34)", 4),
                      Permutation::from_cycles("(14)(23)", 4), 3, PrimeModulus(p))
                  .empty());

    // the 6-cycle's solutions all survive into its cube's pool
    auto deep = overlap(Permutation::from_cycles("(123456)", 6),
                        Permutation::from_cycles("(14)(25)(36)", 6), 5, PrimeModulus(13));
    auto six = stabilizer_solutions(Permutation::from_cycles("(123456)", 6), 5, PrimeModulus(13));
    CHECK(deep.size() == six.solutions.size());
    CHECK(deep.size() == 2);
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(stabilizer_solutions(Permutation(4), 3, PrimeModulus(3)), std::domain_error);
    CHECK_THROWS_AS(stabilizer_solutions(Permutation(3), 3, PrimeModulus(11)), std::domain_error);
}
