#ifndef PGLCENSUS_CENSUS_HPP
#define PGLCENSUS_CENSUS_HPP

#include <string>
#include <vector>

#include "pglcensus/action.hpp"
#include "pglcensus/residue.hpp"
#include "pglcensus/subgroup.hpp"

namespace pglcensus {

enum class CensusMethod { closed_form, brute_force, duality };

std::string census_method_name(CensusMethod m);

struct BreakdownRow {
    std::string label;            // stabilizer class label
    long long num_classes = 0;
    long long orbit_size = 0;     // m_H

    bool operator==(const BreakdownRow& o) const {
        return label == o.label && num_classes == o.num_classes && orbit_size == o.orbit_size;
    }
};

// Per-(k, p) conjugacy-class report.  For p >= k+1 the mass formula
// sum(num_classes * orbit_size) = P(p-2, k-1) holds; totals always
// equal sum(num_classes).
struct ClassCensus {
    unsigned k = 0;
    long p = 0;
    CensusMethod method = CensusMethod::closed_form;
    long long total = 0;
    bool has_breakdown = false;
    std::vector<BreakdownRow> breakdown;  // sorted by (orbit_size, label)
};

// The closed-form class counts for k in 2..5, p >= k+1 prime, including
// the p = k+1 single-class special cases.  Throws std::domain_error for
// composite p or p < k+1 (use count_duality there).
ClassCensus count_closed_form(unsigned k, const PrimeModulus& p);

// Aggregates classify() into a census.
ClassCensus count_brute_force(unsigned k, const PrimeModulus& p,
                              unsigned long long budget = enumeration_budget());

// Total via the block-structure reduction: with a = (k+1) mod p the
// count in PGL_{k+1} equals the count in PGL_a and PGL_{p-a}; supported
// when a is 0, 1 or p-1 (answer 1) or min(a, p-a) <= 6.  Breakdown
// omitted.  Throws UnsupportedError outside the supported range.
ClassCensus count_duality(unsigned k, const PrimeModulus& p);

// Number of equivalence classes of non-trivial admissible projective
// representations of C_p in degree k+1, for p < k+1.
unsigned long long projective_rep_count(unsigned k, const PrimeModulus& p);

struct ReconcileReport {
    ClassCensus expected;  // closed form or duality
    ClassCensus brute;
    bool equal = false;
    std::string detail;    // first difference, empty when equal
};

ReconcileReport reconcile(unsigned k, const PrimeModulus& p,
                          unsigned long long budget = enumeration_budget());

}  // namespace pglcensus

#endif
