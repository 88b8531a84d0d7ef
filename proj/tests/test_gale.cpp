#include <doctest.h>

#include <stdexcept>

#include <random>

#include "pglcensus/gale.hpp"

using namespace pglcensus;

namespace {

FieldPtr make_field(unsigned n) { return std::make_shared<const CyclotomicField>(n); }

// rational matrix in Q = Q(zeta_1) from integer rows
CoordMatrix rational_matrix(const std::vector<std::vector<long>>& rows) {
    auto field = make_field(1);
    CoordMatrix m = CoordMatrix::zero(field, rows.size(), rows[0].size());
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t c = 0; c < m.cols; ++c)
            m.at(r, c) = field->from_rational(rat(rows[r][c]));
    return m;
}

// the five-point example on the line, with sqrt(2) = zeta_8 + zeta_8^7
CoordMatrix five_point_line() {
    auto f = make_field(8);
    CoordMatrix m = CoordMatrix::zero(f, 2, 5);
    CyclotomicNumber one = f->one(), zero = f->zero();
    CyclotomicNumber sqrt2 = f->zeta(1) + f->zeta(7);
    // [1,0], [0,1], [1,1], [1,sqrt2], [1,-sqrt2]
    m.at(0, 0) = one;  m.at(1, 0) = zero;
    m.at(0, 1) = zero; m.at(1, 1) = one;
    m.at(0, 2) = one;  m.at(1, 2) = one;
    m.at(0, 3) = one;  m.at(1, 3) = sqrt2;
    m.at(0, 4) = one;  m.at(1, 4) = -sqrt2;
    return m;
}

CoordMatrix five_point_plane() {
    auto f = make_field(8);
    CoordMatrix m = CoordMatrix::zero(f, 3, 5);
    CyclotomicNumber one = f->one(), zero = f->zero();
    CyclotomicNumber sqrt2 = f->zeta(1) + f->zeta(7);
    // [1,1,1], [1,sqrt2,-sqrt2], [1,0,0], [0,1,0], [0,0,1]
    m.at(0, 0) = one; m.at(1, 0) = one;    m.at(2, 0) = one;
    m.at(0, 1) = one; m.at(1, 1) = sqrt2;  m.at(2, 1) = -sqrt2;
    m.at(0, 2) = one; m.at(1, 2) = zero;   m.at(2, 2) = zero;
    m.at(0, 3) = zero; m.at(1, 3) = one;   m.at(2, 3) = zero;
    m.at(0, 4) = zero; m.at(1, 4) = zero;  m.at(2, 4) = one;
    return m;
}

AssociationWitness sign_witness(const CoordMatrix& ref, const std::vector<int>& signs) {
    AssociationWitness w;
    for (int s : signs) w.lambda.push_back(ref.field->from_rational(rat(s)));
    return w;
}

}  // namespace

TEST_CASE("orbit point sets have the exponent structure of the worked example") {
    PrimeModulus p(11);
    CoordMatrix A = orbit_point_set({4, 2, 1, 0}, p);
    REQUIRE(A.rows == 4);
    REQUIRE(A.cols == 11);
    const CyclotomicField& f = *A.field;
    ResidueVector gen{4, 2, 1, 0};
    for (long j = 1; j <= 11; ++j)
        for (size_t i = 0; i < 4; ++i)
            CHECK(A.at(i, j - 1) == f.zeta(j * gen[i]));
    // last column is the identity point
    for (size_t i = 0; i < 4; ++i) CHECK(A.at(i, 10) == f.one());

    CoordMatrix line = orbit_point_set({1, 0}, PrimeModulus(7));
    CHECK(line.rows == 2);
    CHECK(line.cols == 7);
    for (size_t c = 0; c < 7; ++c) CHECK(line.at(1, c) == line.field->one());

    CHECK_THROWS_AS(orbit_point_set({3, 3}, PrimeModulus(7)), std::domain_error);
}

TEST_CASE("the worked p=11 orbit pair is associated with the identity witness") {
    PrimeModulus p(11);
    IdVector h{11, {4, 2, 1, 0}};
    ResidueVector gen = associated_generator(h, p);
    CHECK(gen == ResidueVector{8, 6, 5, 4, 3, 2, 1});
    CoordMatrix A = orbit_point_set(h.entries, p);
    CoordMatrix B = orbit_point_set(gen, p);
    CHECK(association_check(A, B, identity_witness(A)));

    // perturbing one exponent of B breaks one root-of-unity sum
    CoordMatrix B_bad = B;
    B_bad.at(0, 0) = B.field->zeta(5);
    CHECK_FALSE(association_check(A, B_bad, identity_witness(A)));
}

TEST_CASE("the five-point sqrt(2) example verifies with diag(1,1,-1,-1,-1)") {
    CoordMatrix A = five_point_line();
    CoordMatrix B = five_point_plane();
    CHECK(association_check(A, B, sign_witness(A, {1, 1, -1, -1, -1})));
    CHECK_FALSE(association_check(A, B, sign_witness(A, {1, 1, 1, 1, 1})));
    CHECK(association_check(B, A, sign_witness(A, {1, 1, -1, -1, -1})));  // symmetry
}

TEST_CASE("association is invariant under simultaneous column permutation") {
    PrimeModulus p(11);
    IdVector h{11, {4, 2, 1, 0}};
    CoordMatrix A = orbit_point_set(h.entries, p);
    CoordMatrix B = orbit_point_set(associated_generator(h, p), p);
    // rotate both column orders by three
    CoordMatrix A2 = A, B2 = B;
    for (size_t c = 0; c < A.cols; ++c) {
        size_t src = (c + 3) % A.cols;
        for (size_t r = 0; r < A.rows; ++r) A2.at(r, c) = A.at(r, src);
        for (size_t r = 0; r < B.rows; ++r) B2.at(r, c) = B.at(r, src);
    }
    CHECK(association_check(A2, B2, identity_witness(A2)));
}

TEST_CASE("association witness dimension contract") {
    CoordMatrix A = five_point_line();
    CHECK_THROWS_AS(association_check(A, A, identity_witness(A)), std::domain_error);
    CHECK_THROWS_AS(find_association_lambda(A, A), std::domain_error);
    AssociationWitness with_zero = identity_witness(A);
    with_zero.lambda[2] = A.field->zero();
    CoordMatrix B = five_point_plane();
    CHECK_THROWS_AS(association_check(A, B, with_zero), std::domain_error);
}

TEST_CASE("find_association_lambda recovers the identity witness up to scale") {
    PrimeModulus p(11);
    IdVector h{11, {4, 2, 1, 0}};
    CoordMatrix A = orbit_point_set(h.entries, p);
    CoordMatrix B = orbit_point_set(associated_generator(h, p), p);
    auto w = find_association_lambda(A, B);
    REQUIRE(w.has_value());
    for (size_t j = 0; j < w->lambda.size(); ++j) {
        CHECK_FALSE(w->lambda[j].is_zero());
        CHECK(w->lambda[j] == w->lambda[0]);
    }
    CHECK(association_check(A, B, *w));
}

TEST_CASE("the normal form (I|A) pairs with (A^T|I) by a sign-split witness") {
    // 2x6 rational points in normal form
    CoordMatrix P = rational_matrix({{1, 0, 1, 2, 3, 1}, {0, 1, 1, 5, 2, 4}});
    CoordMatrix G = gale_transform(P);
    REQUIRE(G.rows == 4);
    REQUIRE(G.cols == 6);
    // right block is the identity
    const CyclotomicField& f = *G.field;
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 4; ++c)
            CHECK(G.at(r, 2 + c) == (r == c ? f.one() : f.zero()));
    // left block is the transpose of the original A-part
    for (size_t r = 0; r < 4; ++r)
        for (size_t c = 0; c < 2; ++c)
            CHECK(G.at(r, c) == P.at(c, 2 + r));
    auto w = find_association_lambda(P, G);
    REQUIRE(w.has_value());
    CHECK(association_check(P, G, *w));
    // sign pattern (+ + | - - - -) after normalizing the first entry
    CyclotomicNumber scale = w->lambda[0].inverse();
    for (size_t j = 0; j < 6; ++j) {
        Rat q;
        REQUIRE((w->lambda[j] * scale).as_rational(q));
        CHECK((j < 2 ? q > 0 : q < 0));
    }
}

TEST_CASE("gale transform of the five-point example is its displayed associate") {
    CoordMatrix A = five_point_line();
    CoordMatrix V = five_point_plane();
    CoordMatrix G = gale_transform(A);
    REQUIRE(G.rows == V.rows);
    REQUIRE(G.cols == V.cols);
    // equal up to column scaling; here the scalings are all 1
    for (size_t r = 0; r < G.rows; ++r)
        for (size_t c = 0; c < G.cols; ++c)
            CHECK(G.at(r, c) == V.at(r, c));
}

TEST_CASE("gale transform needs an independent frame") {
    CoordMatrix bad = rational_matrix({{1, 2, 1, 0, 3, 1}, {2, 4, 1, 1, 1, 5}});
    CHECK_THROWS_AS(gale_transform(bad), std::domain_error);
}

TEST_CASE("general position checks") {
    // fundamental simplex plus the all-ones point
    CoordMatrix frame = rational_matrix({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(general_position_check(frame));
    CoordMatrix repeated = rational_matrix({{1, 0, 1}, {0, 1, 0}});
    // columns 1 and 3 coincide
    CHECK_FALSE(general_position_check(repeated));

    PrimeModulus p(11);
    CoordMatrix orbit11 = orbit_point_set({4, 2, 1, 0}, p);
    CHECK(general_position_check(orbit11));
    CHECK(general_position_check(orbit11, false));  // exact path only
}

TEST_CASE("projective equivalence finds and refuses transforms") {
    CoordMatrix A = rational_matrix({{1, 0, 1, 2, 3}, {0, 1, 1, 5, 2}});
    // column rescaling is projectively trivial
    CoordMatrix B = A;
    const CyclotomicField& f = *B.field;
    for (size_t r = 0; r < B.rows; ++r) {
        B.at(r, 2) *= f.from_rational(rat(7));
        B.at(r, 4) *= f.from_rational(rat(-3, 2));
    }
    auto T = projective_equivalence(A, B);
    REQUIRE(T.has_value());

    // cross-ratios differ: inequivalent ordered quintuples on the line
    CoordMatrix C = rational_matrix({{1, 0, 1, 2, 3}, {0, 1, 1, 5, 7}});
    CHECK_FALSE(projective_equivalence(A, C).has_value());

    // a cyclic shift of an orbit is realized by the diagonal generator
    PrimeModulus p(11);
    CoordMatrix V = orbit_point_set({8, 6, 5, 4, 3, 2, 1}, p);
    CoordMatrix W = V;
    for (size_t c = 0; c < V.cols; ++c) {
        size_t src = (c + 1) % V.cols;
        for (size_t r = 0; r < V.rows; ++r) W.at(r, c) = V.at(r, src);
    }
    CHECK(projective_equivalence(V, W).has_value());
}

TEST_CASE("associated generators") {
    PrimeModulus p5(5);
    CHECK(associated_generator({5, {2, 1, 0}}, p5) == ResidueVector{2, 1});
    // the two small orbits pass the identity-witness check
    CoordMatrix T = orbit_point_set({2, 1, 0}, p5);
    CoordMatrix V = orbit_point_set({2, 1}, p5);
    CHECK(association_check(T, V, identity_witness(T)));

    // output length is always p - a
    PrimeModulus p7(7);
    CHECK(associated_generator({7, {4, 3, 2, 1, 0}}, p7).size() == 2);
    CHECK_THROWS_AS(associated_generator({7, {6, 5, 4, 3, 2, 1, 0}}, p7), std::domain_error);
}

TEST_CASE("orbit association holds for every admissible id vector up to p = 13") {
    for (long pv : {5L, 7L, 11L, 13L}) {
        PrimeModulus p(pv);
        for (unsigned a = 2; a <= 5 && a <= static_cast<unsigned>(pv - 2); ++a) {
            unsigned k = a - 1;
            if (pv < static_cast<long>(k + 1)) continue;
            for (const auto& g : enumerate_subgroups(k, p)) {
                IdVector h = *g.id_vec;
                CoordMatrix T = orbit_point_set(h.entries, p);
                CoordMatrix V = orbit_point_set(associated_generator(h, p), p);
                CHECK(association_check(T, V, identity_witness(T)));
            }
        }
    }
}

TEST_CASE("block expansion reproduces the multi-orbit construction") {
    PrimeModulus p(11);
    IdVector h{11, {4, 2, 1, 0}};

    BlockExpansion l1 = block_expand(h, p, 1);
    CHECK(l1.generator == associated_generator(h, p));
    CHECK(l1.second_bases.size() == 1);

    BlockExpansion l2 = block_expand(h, p, 2);
    CHECK(l2.generator.size() == 18);
    ResidueVector expect2{8, 6, 5, 4, 3, 2, 1, 8, 6, 5, 4, 3, 2, 1, 7, 9, 10, 0};
    CHECK(l2.generator == expect2);
    REQUIRE(l2.first_bases.size() == 2);
    CHECK(l2.first_bases[1] == std::vector<Rat>{rat(4), rat(3), rat(2), rat(1)});
    CoordMatrix A2 = multi_orbit_point_set(h.entries, p, l2.first_bases);
    CoordMatrix B2 = multi_orbit_point_set(l2.generator, p, l2.second_bases);
    CHECK(A2.cols == 22);
    CHECK(B2.rows == 18);
    CHECK(association_check(A2, B2, identity_witness(A2)));

    BlockExpansion l3 = block_expand(h, p, 3);
    CHECK(l3.generator.size() == 29);
    CHECK(l3.first_bases[2] == std::vector<Rat>{rat(7), rat(5), rat(3), rat(1)});
    CoordMatrix A3 = multi_orbit_point_set(h.entries, p, l3.first_bases);
    CoordMatrix B3 = multi_orbit_point_set(l3.generator, p, l3.second_bases);
    CHECK(association_check(A3, B3, identity_witness(A3)));
}

TEST_CASE("gale double transform is projectively equivalent to the input") {
    std::mt19937 rng(20250810);
    std::uniform_int_distribution<long> entry(1, 23);
    int done = 0;
    while (done < 3) {
        size_t k1 = 2 + (rng() % 2);     // 2 or 3 rows
        size_t n = k1 + 3 + (rng() % 2);
        std::vector<std::vector<long>> rows(k1, std::vector<long>(n));
        for (auto& row : rows)
            for (auto& x : row) x = entry(rng);
        CoordMatrix P = rational_matrix(rows);
        if (!general_position_check(P)) continue;
        CoordMatrix G = gale_transform(P);
        auto w = find_association_lambda(P, G);
        REQUIRE(w.has_value());
        CoordMatrix PP = gale_transform(G);
        REQUIRE(PP.rows == P.rows);
        CHECK(projective_equivalence(P, PP).has_value());
        ++done;
    }
}
