#ifndef PGLCENSUS_GALE_HPP
#define PGLCENSUS_GALE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "pglcensus/cyclotomic.hpp"
#include "pglcensus/residue.hpp"
#include "pglcensus/subgroup.hpp"

namespace pglcensus {

using FieldPtr = std::shared_ptr<const CyclotomicField>;

// Projective coordinates of an ordered point set: rows = ambient
// dimension + 1, one column per point.  No zero column.
struct CoordMatrix {
    FieldPtr field;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<CyclotomicNumber> entries;  // row-major

    static CoordMatrix zero(FieldPtr field, size_t rows, size_t cols);

    CyclotomicNumber& at(size_t r, size_t c) { return entries[r * cols + c]; }
    const CyclotomicNumber& at(size_t r, size_t c) const { return entries[r * cols + c]; }

    bool has_zero_column() const;
};

// Diagonal of the association identity M_A . Lambda . M_B^T = 0; every
// entry non-zero.
struct AssociationWitness {
    std::vector<CyclotomicNumber> lambda;
};

// The orbit of base under the diagonal subgroup generated by the
// exponent vector gen: column j (1-based, j = 1..p) has entries
// base[i] * zeta_p^{j * gen[i]}.  An empty base means the identity
// point.  Throws std::domain_error when the orbit is trivial (fewer
// than two distinct exponents among the non-zero base coordinates).
CoordMatrix orbit_point_set(const ResidueVector& gen, const PrimeModulus& p,
                            const std::vector<Rat>& base = {});

// Orbits of several base points, concatenated in order.
CoordMatrix multi_orbit_point_set(const ResidueVector& gen, const PrimeModulus& p,
                                  const std::vector<std::vector<Rat>>& bases);

// True iff every entry of A . diag(lambda) . B^T is exactly zero.
bool association_check(const CoordMatrix& A, const CoordMatrix& B,
                       const AssociationWitness& witness);

AssociationWitness identity_witness(const CoordMatrix& A);

// Decides the existential Lambda of the association definition: the
// condition is linear in lambda, so the exact nullspace of the
// (A.rows * B.rows) x n system is computed; the sets are associated iff
// the nullspace touches every coordinate, in which case a vector with
// all entries non-zero is assembled deterministically.
std::optional<AssociationWitness> find_association_lambda(const CoordMatrix& A,
                                                          const CoordMatrix& B);

// Sends the first k+1 points to the fundamental simplex, obtaining
// (I | A), and returns (A^T | I).  Throws std::domain_error when the
// first k+1 columns are dependent.
CoordMatrix gale_transform(const CoordMatrix& points);

// Every (rows)-subset of columns has non-zero determinant.  The
// prefilter maps zeta_n to an element of order n in a prime field and
// only escalates vanishing determinants to exact arithmetic.
bool general_position_check(const CoordMatrix& points, bool use_prefilter = true);

// Exact determinant by fraction-free Bareiss elimination.
CyclotomicNumber determinant(const CoordMatrix& square);

// The projective transform carrying column i of A to column i of B for
// every i, or nullopt when the sets are inequivalent.  Throws
// std::domain_error on degenerate frames.
std::optional<CoordMatrix> projective_equivalence(const CoordMatrix& A, const CoordMatrix& B);

// The negated complement of h's entries in Z_p, ordered decreasingly;
// the orbit point sets of h and of the result are associated with
// Lambda = I.
ResidueVector associated_generator(const IdVector& h, const PrimeModulus& p);

// l-orbit generalization: generator of length l*p - a (l copies of the
// negated complement then l-1 copies of the negated entries of h) plus
// matched base points for both sides.
struct BlockExpansion {
    ResidueVector generator;
    std::vector<std::vector<Rat>> first_bases;   // seeds in P^{a-1}, first is all-ones
    std::vector<std::vector<Rat>> second_bases;  // block-indicator points in P^{lp-a-1}
};

BlockExpansion block_expand(const IdVector& h, const PrimeModulus& p, unsigned l,
                            const std::vector<std::vector<Rat>>& seeds = {});

}  // namespace pglcensus

#endif
