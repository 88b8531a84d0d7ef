#include "pglcensus/congruence.hpp"

#include <algorithm>

#include "pglcensus/errors.hpp"

namespace pglcensus {

namespace {

bool all_distinct(const ResidueVector& v) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

// Solutions of sigma(v) = m*v + c with v[k-1] = 1, v[k] = 0 for one
// fixed (m, c) pair: Gaussian elimination over Z_p on the n x n system
// followed by enumeration of the free variables.
void solve_linear_for_witness(const Permutation& sigma, unsigned k, const PrimeModulus& p, long m,
                              long c, std::vector<ResidueVector>& out) {
    const unsigned n = k + 1;
    // back substitution order: unknowns v_0..v_n-1; constraints:
    //   v[sigma^{-1}(i)] - m*v[i] = c    for each i
    //   v[n-2] = 1, v[n-1] = 0
    std::vector<ResidueVector> rows;  // each row: n coefficients + rhs
    for (unsigned i = 0; i < n; ++i) {
        ResidueVector row(n + 1, 0);
        row[sigma.preimage(i)] = p.add(row[sigma.preimage(i)], 1);
        row[i] = p.sub(row[i], m);
        row[n] = p.reduce(c);
        rows.push_back(std::move(row));
    }
    {
        ResidueVector row(n + 1, 0);
        row[n - 2] = 1;
        row[n] = 1;
        rows.push_back(row);
        ResidueVector row2(n + 1, 0);
        row2[n - 1] = 1;
        row2[n] = 0;
        rows.push_back(row2);
    }

    // row echelon
    unsigned rank = 0;
    std::vector<int> pivot_col;
    for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
        unsigned pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        long inv = p.inv(rows[rank][col]);
        for (unsigned j = col; j <= n; ++j) rows[rank][j] = p.mul(rows[rank][j], inv);
        for (unsigned r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            long f = rows[r][col];
            for (unsigned j = col; j <= n; ++j)
                rows[r][j] = p.sub(rows[r][j], p.mul(f, rows[rank][j]));
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    // inconsistency: zero row with non-zero rhs
    for (unsigned r = rank; r < rows.size(); ++r)
        if (rows[r][n] != 0) return;

    std::vector<int> free_cols;
    {
        std::vector<char> is_pivot(n, 0);
        for (int ccol : pivot_col) is_pivot[ccol] = 1;
        for (unsigned col = 0; col < n; ++col)
            if (!is_pivot[col]) free_cols.push_back(static_cast<int>(col));
    }

    ResidueVector v(n, 0);
    std::vector<long> assign(free_cols.size(), 0);
    while (true) {
        for (size_t f = 0; f < free_cols.size(); ++f) v[free_cols[f]] = assign[f];
        for (unsigned r = 0; r < rank; ++r) {
            long x = rows[r][n];
            for (int fcol : free_cols)
                x = p.sub(x, p.mul(rows[r][fcol], v[fcol]));
            v[pivot_col[r]] = x;
        }
        if (all_distinct(v)) out.push_back(v);
        // advance the free assignment
        size_t f = 0;
        while (f < assign.size()) {
            if (++assign[f] < p.value()) break;
            assign[f] = 0;
            ++f;
        }
        if (f == assign.size()) break;
        if (assign.empty()) break;
    }
}

}  // namespace

CongruenceSolutionSet stabilizer_solutions(const Permutation& sigma, unsigned k,
                                           const PrimeModulus& p) {
    if (p.value() < static_cast<long>(k + 1))
        throw std::domain_error("stabilizer_solutions: requires p >= k+1");
    if (sigma.degree() != k + 1)
        throw std::domain_error("stabilizer_solutions: permutation degree must be k+1");

    CongruenceSolutionSet result;
    result.sigma = sigma;
    result.p = p.value();

    // (ii) linear-system route, with scaling witnesses
    std::vector<ResidueVector> linear;
    for (long m = 1; m < p.value(); ++m) {
        for (long c = 0; c < p.value(); ++c) {
            std::vector<ResidueVector> sols;
            solve_linear_for_witness(sigma, k, p, m, c, sols);
            for (ResidueVector& v : sols) {
                linear.push_back(v);
                result.scaling_witnesses.emplace(v, std::make_pair(m, c));
            }
        }
    }
    std::sort(linear.begin(), linear.end());
    linear.erase(std::unique(linear.begin(), linear.end()), linear.end());

    // (i) enumeration route
    std::vector<ResidueVector> filtered;
    for (const DiagonalSubgroup& g : enumerate_subgroups(k, p)) {
        if (canonicalize(permute_vector(sigma, g.id_vec->entries), p) == g.canon)
            filtered.push_back(g.id_vec->entries);
    }
    std::sort(filtered.begin(), filtered.end());

    if (filtered != linear)
        throw InternalConsistencyError(
            "stabilizer_solutions: enumeration filter and linear solver disagree for " +
            sigma.to_cycle_string() + " at k=" + std::to_string(k) +
            ", p=" + std::to_string(p.value()));

    for (ResidueVector& v : linear) {
        IdVector iv;
        iv.p = p.value();
        iv.entries = std::move(v);
        result.solutions.push_back(std::move(iv));
    }
    return result;
}

Permutation representative_of_label(const std::string& label, unsigned k) {
    const unsigned d = k + 1;
    auto need = [&](unsigned points) {
        if (d < points)
            throw UnsupportedError("cycle type '" + label + "' does not fit in degree " +
                                   std::to_string(d));
    };
    if (label == "transposition") { need(2); return Permutation::from_cycles("(1 2)", d); }
    if (label == "2x2")           { need(4); return Permutation::from_cycles("(1 3)(2 4)", d); }
    if (label == "2x2x2")         { need(6); return Permutation::from_cycles("(1 4)(2 5)(3 6)", d); }
    if (label == "3cycle")        { need(3); return Permutation::from_cycles("(1 2 3)", d); }
    if (label == "3x3")           { need(6); return Permutation::from_cycles("(1 3 5)(2 4 6)", d); }
    if (label == "4cycle")        { need(4); return Permutation::from_cycles("(1 2 3 4)", d); }
    if (label == "5cycle")        { need(5); return Permutation::from_cycles("(1 2 3 4 5)", d); }
    if (label == "6cycle")        { need(6); return Permutation::from_cycles("(1 2 3 4 5 6)", d); }
    throw UnsupportedError("unknown cycle-type label '" + label + "'");
}

std::optional<long> solution_count_formula(const std::string& label, unsigned k,
                                           const PrimeModulus& pm) {
    const long p = pm.value();
    auto gate = [&](long mod) { return p % mod == 1 ? 1L : 0L; };
    switch (k) {
        case 2:
            if (label == "transposition") return 1;
            if (label == "3cycle") return p == 3 ? 1 : 2 * gate(3);
            break;
        case 3:
            if (label == "transposition") return 0;
            if (label == "2x2") return p - 3;
            if (label == "3cycle") return 2 * gate(3);
            if (label == "4cycle") return 2 * gate(4);
            break;
        case 4:
            if (label == "transposition") return 0;
            if (label == "3cycle") return 0;
            if (label == "2x2") return p - 3;
            if (label == "4cycle") return 2 * gate(4);
            // p = 5 keeps the single solution [4,3,2,1,0]: s = -1 is a
            // root of s^4-s^3+s^2-s+1 mod 5
            if (label == "5cycle") return p == 5 ? 1 : 4 * gate(5);
            break;
        case 5:
            if (label == "transposition") return 0;
            if (label == "3cycle") return 0;
            if (label == "4cycle") return 0;
            if (label == "2x2") return 0;
            if (label == "2x2x2") return (p - 3) * (p - 5);
            if (label == "3x3") return 2 * (p - 4) * gate(3);
            if (label == "5cycle") return 4 * gate(5);
            if (label == "6cycle") return 2 * gate(3);
            break;
        default:
            throw UnsupportedError("solution_count_formula: k=" + std::to_string(k) +
                                   " is outside the covered range 2..5");
    }
    // fall through: the label names a valid cycle type without a table row
    representative_of_label(label, k);  // validates the label itself
    return std::nullopt;
}

std::vector<IdVector> overlap(const Permutation& sigma1, const Permutation& sigma2, unsigned k,
                              const PrimeModulus& p) {
    auto s1 = stabilizer_solutions(sigma1, k, p);
    auto s2 = stabilizer_solutions(sigma2, k, p);
    std::vector<IdVector> out;
    std::set_intersection(s1.solutions.begin(), s1.solutions.end(), s2.solutions.begin(),
                          s2.solutions.end(), std::back_inserter(out));
    return out;
}

}  // namespace pglcensus
