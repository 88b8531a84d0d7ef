#ifndef PGLCENSUS_ACTION_HPP
#define PGLCENSUS_ACTION_HPP

#include <string>
#include <vector>

#include "pglcensus/perm.hpp"
#include "pglcensus/subgroup.hpp"

namespace pglcensus {

// Left action of the permutation matrices on exponent vectors:
// (sigma . v)[i] = v[sigma^{-1}(i)].
ResidueVector permute_vector(const Permutation& sigma, const ResidueVector& v);

// Permute and re-canonicalize.  Throws std::domain_error on a degree
// mismatch.
DiagonalSubgroup act(const Permutation& sigma, const DiagonalSubgroup& g);

// {sigma : act(sigma, g) = g}, by exhaustive scan over S_{dim}.
std::vector<Permutation> stabilizer(const DiagonalSubgroup& g);

// {act(sigma, g) : sigma}, sorted by canonical vector.
std::vector<DiagonalSubgroup> orbit(const DiagonalSubgroup& g);

struct OrbitReport {
    DiagonalSubgroup representative;     // least canonical vector in the orbit
    unsigned long long orbit_size = 0;   // m_H
    std::vector<Permutation> stabilizer; // materialized for degree <= 7 only
    std::string stabilizer_label;
};

// Class-invariant name for a stabilizer subgroup: "trivial", "C2^2",
// "C4", "S3", "D20", ..., falling back to "G<order>".
std::string stabilizer_label(const std::vector<Permutation>& stab, unsigned degree);
// Label from the orbit size alone, used where the stabilizer set is
// not materialized.
std::string stabilizer_label_from_order(unsigned long long order);

// Partition of enumerate_subgroups(k, p) into S_{k+1}-orbits by orbit
// expansion; reports sorted by (orbit_size, representative).
std::vector<OrbitReport> classify(unsigned k, const PrimeModulus& p,
                                  unsigned long long budget = enumeration_budget());

}  // namespace pglcensus

#endif
