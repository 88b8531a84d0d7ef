#ifndef PGLCENSUS_SEMIDIRECT_HPP
#define PGLCENSUS_SEMIDIRECT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pglcensus/cyclotomic.hpp"
#include "pglcensus/perm.hpp"
#include "pglcensus/subgroup.hpp"

namespace pglcensus {

// Intransitive / imprimitive extension of an admissible C_p by a
// permutation (or permutation group) normalizing it, represented by
// generator data only.
struct SemidirectGroup {
    std::string label;
    long p = 0;
    IdVector diag;                        // exponent vector of the diagonal generator
    std::vector<Permutation> twists;      // one generator, two for Imp_S3
    // per twist: sigma(diag) = m*diag + c*(1,..,1)
    std::vector<std::pair<long, long>> witnesses;
};

const std::vector<std::string>& semidirect_labels();

// Degree k+1 acted on by the label's construction.
unsigned semidirect_degree(const std::string& label);

// Builds the labelled group at p, computing congruence-bound parameters
// and validating the closure invariant.  Free parameters (the s / t /
// (u, v) of the intransitive families) may be supplied; defaults pick
// the smallest admissible values.  Throws std::domain_error when the
// label's parity gate fails or no admissible parameter exists.
SemidirectGroup build_semidirect(const std::string& label, const PrimeModulus& p,
                                 const std::vector<long>& free_params = {});

// Number of conjugacy classes of groups with this label: the number of
// cyclic classes whose stabilizer contains a permutation of the label's
// cycle type.  Equals the paper's table expression whenever that
// expression is integral; see semidirect_table_formula for the raw
// table value.
long long count_semidirect_classes(const std::string& label, const PrimeModulus& p);

// The table expression evaluated verbatim (3(p-3)/12 and friends); can
// be non-integral exactly in the cases where a longer cycle's classes
// overlap the count.
Rat semidirect_table_formula(const std::string& label, const PrimeModulus& p);

}  // namespace pglcensus

#endif
