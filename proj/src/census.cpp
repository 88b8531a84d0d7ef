#include "pglcensus/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pglcensus/errors.hpp"

namespace pglcensus {

std::string census_method_name(CensusMethod m) {
    switch (m) {
        case CensusMethod::closed_form: return "closed_form";
        case CensusMethod::brute_force: return "brute_force";
        case CensusMethod::duality: return "duality";
    }
    return "?";
}

namespace {

long long exact_div(long long num, long long den, const char* what) {
    if (den == 0 || num % den != 0)
        throw InternalConsistencyError(std::string("census: non-integral class count in ") + what);
    return num / den;
}

void push_row(ClassCensus& c, const std::string& label, long long classes, long long orbit) {
    if (classes < 0)
        throw InternalConsistencyError("census: negative class count for " + label);
    if (classes == 0) return;
    c.breakdown.push_back({label, classes, orbit});
}

void finish(ClassCensus& c) {
    std::sort(c.breakdown.begin(), c.breakdown.end(),
              [](const BreakdownRow& a, const BreakdownRow& b) {
                  if (a.orbit_size != b.orbit_size) return a.orbit_size < b.orbit_size;
                  return a.label < b.label;
              });
    c.total = 0;
    for (const auto& row : c.breakdown) c.total += row.num_classes;
    c.has_breakdown = true;
}

void check_mass(const ClassCensus& c) {
    long long mass = 0;
    for (const auto& row : c.breakdown) mass += row.num_classes * row.orbit_size;
    long long expected =
        static_cast<long long>(falling_factorial(c.p - 2, c.k - 1));
    if (mass != expected)
        throw InternalConsistencyError("census: breakdown mass " + std::to_string(mass) +
                                       " != P(p-2,k-1) = " + std::to_string(expected));
}

}  // namespace

ClassCensus count_closed_form(unsigned k, const PrimeModulus& pm) {
    const long p = pm.value();
    if (k < 2 || k > 5)
        throw std::domain_error("count_closed_form: k must be in 2..5");
    if (p < static_cast<long>(k + 1))
        throw std::domain_error(
            "count_closed_form: requires p >= k+1; use count_duality for p < k+1");

    ClassCensus c;
    c.k = k;
    c.p = p;
    c.method = CensusMethod::closed_form;

    const long long P = static_cast<long long>(falling_factorial(p - 2, k - 1));
    const bool m3 = p % 3 == 1;
    const bool m4 = p % 4 == 1;
    const bool m5 = p % 5 == 1;

    if (p == static_cast<long>(k + 1)) {
        // single conjugacy class; the stabilizer is the full normalizer
        // pattern of that class (all of S_3 at k=2, the order-20 group
        // at k=4)
        if (k == 2) push_row(c, "S3", 1, 1);
        else if (k == 4) push_row(c, "D20", 1, 6);
        else
            throw std::domain_error("count_closed_form: p = k+1 only occurs for k in {2,4}");
        finish(c);
        check_mass(c);
        return c;
    }

    switch (k) {
        case 2: {
            long long ncyc3 = m3 ? 2 : 0;  // solutions of s^2 - s + 1
            push_row(c, "C3", m3 ? 1 : 0, 2);
            push_row(c, "C2^1", 1, 3);  // 3 transposition solutions in sets of 3
            push_row(c, "trivial", exact_div(P - 3 - ncyc3, 6, "k=2 trivial"), 6);
            break;
        }
        case 3: {
            long long two_by_two = 3 * (p - 3);       // all 2x2 solutions
            long long four_cycle = m4 ? 6 : 0;        // inside the 2x2 count
            long long three_cycle = m3 ? 8 : 0;
            push_row(c, "C4", m4 ? 1 : 0, 6);
            push_row(c, "C3", m3 ? 1 : 0, 8);
            push_row(c, "C2^2", exact_div(two_by_two - four_cycle, 12, "k=3 C2"), 12);
            push_row(c, "trivial", exact_div(P - two_by_two - three_cycle, 24, "k=3 trivial"), 24);
            break;
        }
        case 4: {
            long long two_by_two = 15 * (p - 3);
            long long four_cycle = m4 ? 30 : 0;  // inside the 2x2 count
            long long five_cycle = m5 ? 24 : 0;
            push_row(c, "C5", m5 ? 1 : 0, 24);
            push_row(c, "C4", m4 ? 1 : 0, 30);
            push_row(c, "C2^2", exact_div(two_by_two - four_cycle, 60, "k=4 C2"), 60);
            push_row(c, "trivial", exact_div(P - two_by_two - five_cycle, 120, "k=4 trivial"),
                     120);
            break;
        }
        case 5: {
            long long triple_two = 15 * (p - 3) * (p - 5);
            long long six_cycle = m3 ? 120 : 0;   // inside both overlap pools
            long long double_three = m3 ? 40 * (p - 4) : 0;
            long long five_cycle = m5 ? 144 : 0;
            push_row(c, "C6", m3 ? 1 : 0, 120);
            push_row(c, "C5", m5 ? 1 : 0, 144);
            push_row(c, "C3^2", m3 ? exact_div(double_three - 120, 240, "k=5 C3") : 0, 240);
            push_row(c, "C2^3", exact_div(triple_two - six_cycle, 360, "k=5 C2"), 360);
            long long stabilized =
                m3 ? triple_two + double_three - 120 : triple_two;  // distinct solutions
            stabilized += five_cycle;
            push_row(c, "trivial", exact_div(P - stabilized, 720, "k=5 trivial"), 720);
            break;
        }
    }
    finish(c);
    check_mass(c);
    return c;
}

ClassCensus count_brute_force(unsigned k, const PrimeModulus& p, unsigned long long budget) {
    ClassCensus c;
    c.k = k;
    c.p = p.value();
    c.method = CensusMethod::brute_force;
    std::map<std::pair<long long, std::string>, long long> rows;
    for (const OrbitReport& r : classify(k, p, budget))
        rows[{static_cast<long long>(r.orbit_size), r.stabilizer_label}] += 1;
    for (const auto& [key, count] : rows)
        c.breakdown.push_back({key.second, count, key.first});
    finish(c);
    if (c.p >= static_cast<long>(k + 1)) check_mass(c);
    return c;
}

ClassCensus count_duality(unsigned k, const PrimeModulus& pm) {
    const long p = pm.value();
    ClassCensus c;
    c.k = k;
    c.p = p;
    c.method = CensusMethod::duality;
    c.has_breakdown = false;

    long a = static_cast<long>((k + 1) % static_cast<unsigned long>(p));
    if (a == 0 || a == 1 || a == p - 1) {
        c.total = 1;
        return c;
    }
    long m = std::min(a, p - a);
    if (m == 2) {
        c.total = 1;  // PGL_2 base case
        return c;
    }
    if (m <= 6) {
        c.total = count_closed_form(static_cast<unsigned>(m - 1), pm).total;
        return c;
    }
    throw UnsupportedError("count_duality: (k+1) mod p reduces to PGL_" + std::to_string(a) +
                           " vs PGL_" + std::to_string(p - a) +
                           "; no base formula beyond PGL_6 is available");
}

unsigned long long projective_rep_count(unsigned k, const PrimeModulus& pm) {
    const long p = pm.value();
    if (p >= static_cast<long>(k + 1))
        throw std::domain_error("projective_rep_count: requires p < k+1");
    unsigned long long a = (k + 1) % static_cast<unsigned long>(p);
    if (a == 0) return 1;
    unsigned long long binom = binomial(p - 1, a - 1);
    if (binom % a != 0)
        throw InternalConsistencyError("projective_rep_count: binomial(p-1, a-1) not divisible by a");
    return binom / a;
}

namespace {

std::string describe_row(const BreakdownRow& r) {
    std::ostringstream os;
    os << r.label << ": " << r.num_classes << " classes of length " << r.orbit_size;
    return os.str();
}

}  // namespace

ReconcileReport reconcile(unsigned k, const PrimeModulus& p, unsigned long long budget) {
    ReconcileReport rep;
    bool closed = k >= 2 && k <= 5 && p.value() >= static_cast<long>(k + 1);
    rep.expected = closed ? count_closed_form(k, p) : count_duality(k, p);
    rep.brute = count_brute_force(k, p, budget);
    rep.equal = true;
    if (rep.expected.total != rep.brute.total) {
        rep.equal = false;
        rep.detail = "total " + std::to_string(rep.expected.total) + " != brute " +
                     std::to_string(rep.brute.total);
        return rep;
    }
    if (rep.expected.has_breakdown) {
        size_t n = std::max(rep.expected.breakdown.size(), rep.brute.breakdown.size());
        for (size_t i = 0; i < n; ++i) {
            if (i >= rep.expected.breakdown.size()) {
                rep.equal = false;
                rep.detail = "extra brute row " + describe_row(rep.brute.breakdown[i]);
                return rep;
            }
            if (i >= rep.brute.breakdown.size()) {
                rep.equal = false;
                rep.detail = "missing brute row " + describe_row(rep.expected.breakdown[i]);
                return rep;
            }
            if (!(rep.expected.breakdown[i] == rep.brute.breakdown[i])) {
                rep.equal = false;
                rep.detail = "row mismatch: closed " + describe_row(rep.expected.breakdown[i]) +
                             " vs brute " + describe_row(rep.brute.breakdown[i]);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace pglcensus
