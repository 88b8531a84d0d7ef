#ifndef PGLCENSUS_SUBGROUP_HPP
#define PGLCENSUS_SUBGROUP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pglcensus/residue.hpp"

namespace pglcensus {

using ResidueVector = std::vector<long>;

std::string residue_vector_to_string(const ResidueVector& v);
ResidueVector residue_vector_from_string(const std::string& s);

// Canonical generator of a diagonal order-p subgroup in the p >= k+1
// regime: residues mod p, last entry 0, second-to-last entry 1.
struct IdVector {
    long p = 0;
    ResidueVector entries;

    bool operator==(const IdVector& o) const { return p == o.p && entries == o.entries; }
    bool operator<(const IdVector& o) const { return entries < o.entries; }
};

// A diagonal subgroup of order p in PGL_{dim}(C), identified with the
// Z_p-line through its exponent vector's class in Z_p^dim / <(1,..,1)>.
// Equality is equality of the canonical vectors.
struct DiagonalSubgroup {
    long p = 0;
    ResidueVector canon;                 // canonicalize() of any generator
    std::optional<IdVector> id_vec;      // present in the admissible regime

    size_t dim() const { return canon.size(); }
    bool operator==(const DiagonalSubgroup& o) const { return p == o.p && canon == o.canon; }
    bool operator<(const DiagonalSubgroup& o) const { return canon < o.canon; }
};

// Eigenvalue-multiplicity pattern forced on admissible subgroups when
// p < k+1: with a = (k+1) mod p, either p blocks of size l = (k+1)/p
// (a = 0) or a blocks of size l and p-a blocks of size l-1.
struct BlockProfile {
    long p = 0;
    unsigned k = 0;
    long a = 0;
    long l = 0;
    std::map<long, long> multiplicities;  // residue -> repeat count, every residue keyed
};

BlockProfile block_profile(unsigned k, const PrimeModulus& p);

// Shift the last entry to 0 and rescale the second-to-last to 1.
// Throws std::domain_error when the last two entries coincide mod p or
// the vector is constant mod p (trivial class).
IdVector normalize(const ResidueVector& raw, const PrimeModulus& p);

// Lexicographically minimal vector among {m*raw + c*(1,..,1)},
// m in 1..p-1, c in 0..p-1; the subgroup identity test valid in both
// regimes.  Throws std::domain_error on constant input.
ResidueVector canonicalize(const ResidueVector& raw, const PrimeModulus& p);

DiagonalSubgroup make_subgroup(const ResidueVector& raw, const PrimeModulus& p);

// Subgroup-expansion budget for enumeration/classification; the
// PGLCENSUS_BUDGET environment variable overrides the default.
unsigned long long enumeration_budget();

// p >= k+1: exactly falling_factorial(p-2, k-1) subgroups, one per
// IdVector, in lexicographic order of id_vec.  p < k+1: every distinct
// subgroup whose eigenvalue multiset matches block_profile(k, p),
// deduplicated via canonicalize, in lexicographic order of canon.
// Throws ResourceError when the output would exceed the budget.
std::vector<DiagonalSubgroup> enumerate_subgroups(unsigned k, const PrimeModulus& p,
                                                  unsigned long long budget = enumeration_budget());

// Packs entries (each < 32) of vectors of dimension <= 12 into a hash key.
std::uint64_t pack_residue_vector(const ResidueVector& v);

// pack(canonicalize(v)) without heap allocation; same constraints as
// pack_residue_vector.  The workhorse of the classification loops.
std::uint64_t canonical_key(const long* v, size_t n, long p);

}  // namespace pglcensus

#endif
