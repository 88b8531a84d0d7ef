#include "pglcensus/subgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "pglcensus/errors.hpp"

namespace pglcensus {

std::string residue_vector_to_string(const ResidueVector& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

ResidueVector residue_vector_from_string(const std::string& s) {
    ResidueVector v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        long val = std::stol(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw std::domain_error("residue_vector_from_string: bad token '" + tok + "'");
        v.push_back(val);
    }
    if (v.empty())
        throw std::domain_error("residue_vector_from_string: empty vector");
    return v;
}

namespace {

bool is_constant_mod(const ResidueVector& v, const PrimeModulus& p) {
    for (size_t i = 1; i < v.size(); ++i)
        if (p.reduce(v[i]) != p.reduce(v[0])) return false;
    return true;
}

}  // namespace

BlockProfile block_profile(unsigned k, const PrimeModulus& p) {
    BlockProfile bp;
    bp.p = p.value();
    bp.k = k;
    bp.a = static_cast<long>(k + 1) % p.value();
    if (bp.a == 0) {
        bp.l = static_cast<long>(k + 1) / p.value();
        for (long r = 0; r < p.value(); ++r) bp.multiplicities[r] = bp.l;
    } else {
        bp.l = (static_cast<long>(k + 1) - bp.a) / p.value() + 1;
        for (long r = 0; r < p.value(); ++r)
            bp.multiplicities[r] = (r < bp.a) ? bp.l : bp.l - 1;
    }
    return bp;
}

IdVector normalize(const ResidueVector& raw, const PrimeModulus& p) {
    if (raw.size() < 2)
        throw std::domain_error("normalize: need at least two entries");
    if (is_constant_mod(raw, p))
        throw std::domain_error("normalize: constant vector represents the trivial class");
    size_t n = raw.size();
    long shift = p.reduce(raw[n - 1]);
    long pivot = p.sub(raw[n - 2], shift);
    if (pivot == 0)
        throw std::domain_error("normalize: last two entries coincide mod p");
    long scale = p.inv(pivot);
    IdVector out;
    out.p = p.value();
    out.entries.resize(n);
    for (size_t i = 0; i < n; ++i)
        out.entries[i] = p.mul(scale, p.sub(raw[i], shift));
    return out;
}

ResidueVector canonicalize(const ResidueVector& raw, const PrimeModulus& p) {
    if (is_constant_mod(raw, p))
        throw std::domain_error("canonicalize: constant vector represents the trivial class");
    size_t n = raw.size();
    const long pv = p.value();
    // The lexicographic minimum over m*raw + c necessarily has first
    // entry 0, and for fixed m the choice c = -m*raw[0] is the only one
    // achieving that, so p-1 candidates suffice.
    ResidueVector best(n);
    for (size_t i = 0; i < n; ++i)
        best[i] = p.sub(raw[i], raw[0]);
    ResidueVector shifted = best;
    ResidueVector cand(n);
    for (long m = 2; m < pv; ++m) {
        int cmp = 0;
        for (size_t i = 0; i < n; ++i) {
            long x = (m * shifted[i]) % pv;
            cand[i] = x;
            if (cmp == 0) {
                if (x < best[i]) cmp = -1;
                else if (x > best[i]) { cmp = 1; break; }
            }
        }
        if (cmp < 0) best.swap(cand);
    }
    return best;
}

DiagonalSubgroup make_subgroup(const ResidueVector& raw, const PrimeModulus& p) {
    DiagonalSubgroup g;
    g.p = p.value();
    g.canon = canonicalize(raw, p);
    // Distinctness of the last two entries is invariant across the
    // (m, c) class, so it decides id-vector existence.
    size_t n = raw.size();
    if (p.reduce(raw[n - 2]) != p.reduce(raw[n - 1]))
        g.id_vec = normalize(raw, p);
    return g;
}

unsigned long long enumeration_budget() {
    static const unsigned long long value = [] {
        const char* env = std::getenv("PGLCENSUS_BUDGET");
        if (env) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 2000000ULL;
    }();
    return value;
}

namespace {

void enumerate_admissible(unsigned k, const PrimeModulus& p, unsigned long long budget,
                          std::vector<DiagonalSubgroup>& out) {
    unsigned long long count = falling_factorial(p.value() - 2, k - 1);
    if (count > budget)
        throw ResourceError("enumerate_subgroups: " + std::to_string(count) +
                            " subgroups exceed the budget of " + std::to_string(budget) +
                            " (set PGLCENSUS_BUDGET to raise it)");
    out.reserve(out.size() + count);
    std::vector<char> used(p.value(), 0);
    // Depth-first over the k-1 free positions keeps id vector order
    // lexicographic.
    ResidueVector entries(k + 1);
    entries[k - 1] = 1;
    entries[k] = 0;

    auto emit = [&]() {
        DiagonalSubgroup g;
        g.p = p.value();
        IdVector iv;
        iv.p = p.value();
        iv.entries = entries;
        g.id_vec = std::move(iv);
        g.canon = canonicalize(entries, p);
        out.push_back(std::move(g));
    };

    if (k == 1) {  // PGL_2: the single id vector [1, 0]
        emit();
        return;
    }

    // iterative product over distinct values in {2..p-1}
    size_t depth = 0;
    std::vector<long> cursor(k - 1, 2);
    while (true) {
        if (cursor[depth] >= p.value()) {
            if (depth == 0) break;
            --depth;
            used[entries[depth]] = 0;
            ++cursor[depth];
            continue;
        }
        long v = cursor[depth];
        if (used[v]) {
            ++cursor[depth];
            continue;
        }
        entries[depth] = v;
        if (depth + 1 == static_cast<size_t>(k - 1)) {
            emit();
            ++cursor[depth];
        } else {
            used[v] = 1;
            ++depth;
            cursor[depth] = 2;
        }
    }
}

void enumerate_block(unsigned k, const PrimeModulus& p, unsigned long long budget,
                     std::vector<DiagonalSubgroup>& out) {
    BlockProfile bp = block_profile(k, p);
    long pv = p.value();
    std::vector<ResidueVector> profile_multisets;
    if (bp.a == 0) {
        ResidueVector ms;
        for (long r = 0; r < pv; ++r)
            for (long i = 0; i < bp.l; ++i) ms.push_back(r);
        profile_multisets.push_back(std::move(ms));
    } else {
        // every size-a choice of the residues that appear l times
        std::vector<long> pick(bp.a);
        for (long i = 0; i < bp.a; ++i) pick[i] = i;
        while (true) {
            ResidueVector ms;
            size_t pi = 0;
            for (long r = 0; r < pv; ++r) {
                long mult = (pi < pick.size() && pick[pi] == r) ? bp.l : bp.l - 1;
                if (pi < pick.size() && pick[pi] == r) ++pi;
                for (long i = 0; i < mult; ++i) ms.push_back(r);
            }
            profile_multisets.push_back(std::move(ms));
            // next combination
            long i = bp.a - 1;
            while (i >= 0 && pick[i] == pv - bp.a + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (long j = i + 1; j < bp.a; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    // Each subgroup contributes exactly one self-canonical arrangement,
    // so keeping arrangements that equal their own canonical form
    // enumerates every subgroup once with no dedup pass.  Canonical
    // forms start with 0, which rejects most arrangements in O(1).
    std::vector<ResidueVector> canons;
    unsigned long long scanned = 0;
    const unsigned long long scan_cap =
        budget * static_cast<unsigned long long>(pv) * static_cast<unsigned long long>(pv - 1);
    for (auto& ms : profile_multisets) {
        ResidueVector arrangement = ms;  // sorted already
        do {
            ++scanned;
            if (scanned > scan_cap)
                throw ResourceError("enumerate_subgroups: arrangement scan exceeds the budget of " +
                                    std::to_string(budget) + " (set PGLCENSUS_BUDGET to raise it)");
            if (arrangement[0] != 0) continue;
            if (canonical_key(arrangement.data(), arrangement.size(), pv) !=
                pack_residue_vector(arrangement))
                continue;
            canons.push_back(arrangement);
            if (canons.size() > budget)
                throw ResourceError("enumerate_subgroups: subgroup count exceeds the budget of " +
                                    std::to_string(budget) + " (set PGLCENSUS_BUDGET to raise it)");
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    }
    std::sort(canons.begin(), canons.end());
    for (auto& canon : canons) {
        DiagonalSubgroup g;
        g.p = pv;
        g.canon = std::move(canon);
        // id vector when the class has a generator with distinct
        // last-two entries; the equality pattern is class-invariant.
        if (g.canon[g.canon.size() - 1] != g.canon[g.canon.size() - 2])
            g.id_vec = normalize(g.canon, p);
        out.push_back(std::move(g));
    }
}

}  // namespace

std::vector<DiagonalSubgroup> enumerate_subgroups(unsigned k, const PrimeModulus& p,
                                                  unsigned long long budget) {
    if (k < 1) throw std::domain_error("enumerate_subgroups: k must be >= 1");
    std::vector<DiagonalSubgroup> out;
    if (p.value() >= static_cast<long>(k + 1))
        enumerate_admissible(k, p, budget, out);
    else
        enumerate_block(k, p, budget, out);
    return out;
}

std::uint64_t pack_residue_vector(const ResidueVector& v) {
    if (v.size() > 12)
        throw std::domain_error("pack_residue_vector: dimension > 12");
    std::uint64_t key = 0;
    for (long e : v) {
        if (e < 0 || e >= 32)
            throw std::domain_error("pack_residue_vector: entry out of range");
        key = (key << 5) | static_cast<std::uint64_t>(e);
    }
    // separate different lengths
    key = (key << 4) | static_cast<std::uint64_t>(v.size());
    return key;
}

std::uint64_t canonical_key(const long* v, size_t n, long p) {
    if (n > 12)
        throw std::domain_error("canonical_key: dimension > 12");
    long shifted[12], best[12], cand[12];
    for (size_t i = 0; i < n; ++i) {
        long x = (v[i] - v[0]) % p;
        if (x < 0) x += p;
        shifted[i] = x;
        best[i] = x;
    }
    for (long m = 2; m < p; ++m) {
        int cmp = 0;
        for (size_t i = 0; i < n; ++i) {
            long x = (m * shifted[i]) % p;
            cand[i] = x;
            if (cmp == 0) {
                if (x < best[i]) cmp = -1;
                else if (x > best[i]) { cmp = 1; break; }
            }
        }
        if (cmp < 0)
            for (size_t i = 0; i < n; ++i) best[i] = cand[i];
    }
    std::uint64_t key = 0;
    for (size_t i = 0; i < n; ++i)
        key = (key << 5) | static_cast<std::uint64_t>(best[i]);
    return (key << 4) | static_cast<std::uint64_t>(n);
}

}  // namespace pglcensus
