#ifndef PGLCENSUS_CONGRUENCE_HPP
#define PGLCENSUS_CONGRUENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pglcensus/action.hpp"
#include "pglcensus/perm.hpp"
#include "pglcensus/subgroup.hpp"

namespace pglcensus {

// Admissible solutions of one permutation's stabilizer congruence
// system: the id vectors v with sigma . <v> = <v>, together with the
// scaling witness sigma(v) = m*v + c*(1,..,1).
struct CongruenceSolutionSet {
    Permutation sigma;
    long p = 0;
    std::vector<IdVector> solutions;                       // sorted
    std::map<ResidueVector, std::pair<long, long>> scaling_witnesses;
};

// Computed two independent ways that must agree: (i) filtering the full
// enumeration through act, (ii) solving the linear system
// v[sigma^{-1}(i)] = m*v[i] + c over all (m, c) and filtering
// distinctness.  Disagreement throws InternalConsistencyError.
// Requires p >= k+1.
CongruenceSolutionSet stabilizer_solutions(const Permutation& sigma, unsigned k,
                                           const PrimeModulus& p);

// Closed-form admissible-solution counts for the cycle-type rows the
// tables cover.  Labels: "transposition", "2x2", "2x2x2", "3cycle",
// "3x3", "4cycle", "5cycle", "6cycle".  Unknown or ill-fitting
// (label, k) combinations throw UnsupportedError; a covered label with
// no closed form would return nullopt.
std::optional<long> solution_count_formula(const std::string& cycle_type_label, unsigned k,
                                           const PrimeModulus& p);

// A representative permutation of the labelled cycle type in S_{k+1}.
Permutation representative_of_label(const std::string& cycle_type_label, unsigned k);

// Intersection of the two solution sets.
std::vector<IdVector> overlap(const Permutation& sigma1, const Permutation& sigma2, unsigned k,
                              const PrimeModulus& p);

}  // namespace pglcensus

#endif
