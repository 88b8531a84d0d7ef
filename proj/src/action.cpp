#include "pglcensus/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <cstdint>

#include "pglcensus/errors.hpp"

namespace pglcensus {

ResidueVector permute_vector(const Permutation& sigma, const ResidueVector& v) {
    if (sigma.degree() != v.size())
        throw std::domain_error("permute_vector: degree mismatch");
    ResidueVector w(v.size());
    for (unsigned i = 0; i < v.size(); ++i)
        w[i] = v[sigma.preimage(i)];
    return w;
}

DiagonalSubgroup act(const Permutation& sigma, const DiagonalSubgroup& g) {
    if (sigma.degree() != g.dim())
        throw std::domain_error("act: permutation degree does not match subgroup dimension");
    return make_subgroup(permute_vector(sigma, g.canon), PrimeModulus(g.p));
}

std::vector<Permutation> stabilizer(const DiagonalSubgroup& g) {
    unsigned d = static_cast<unsigned>(g.dim());
    if (d > 8)
        throw ResourceError("stabilizer: exhaustive scan not supported beyond degree 8");
    PrimeModulus p(g.p);
    std::vector<Permutation> out;
    for (const Permutation& sigma : symmetric_group(d)) {
        if (canonicalize(permute_vector(sigma, g.canon), p) == g.canon)
            out.push_back(sigma);
    }
    return out;
}

std::vector<DiagonalSubgroup> orbit(const DiagonalSubgroup& g) {
    PrimeModulus p(g.p);
    unsigned d = static_cast<unsigned>(g.dim());
    std::set<ResidueVector> seen;
    std::deque<ResidueVector> queue;
    seen.insert(g.canon);
    queue.push_back(g.canon);
    auto gens = adjacent_transpositions(d);
    while (!queue.empty()) {
        ResidueVector v = std::move(queue.front());
        queue.pop_front();
        for (const Permutation& t : gens) {
            ResidueVector w = canonicalize(permute_vector(t, v), p);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    std::vector<DiagonalSubgroup> out;
    out.reserve(seen.size());
    for (const ResidueVector& v : seen)
        out.push_back(make_subgroup(v, p));
    return out;
}

namespace {

std::vector<unsigned> element_orders(const std::vector<Permutation>& stab) {
    std::vector<unsigned> orders;
    orders.reserve(stab.size());
    for (const Permutation& s : stab) orders.push_back(s.order());
    std::sort(orders.begin(), orders.end());
    return orders;
}

bool is_abelian(const std::vector<Permutation>& stab) {
    for (size_t i = 0; i < stab.size(); ++i)
        for (size_t j = i + 1; j < stab.size(); ++j)
            if (stab[i] * stab[j] != stab[j] * stab[i]) return false;
    return true;
}

bool contains_cycle_type(const std::vector<Permutation>& stab, const std::vector<unsigned>& type) {
    for (const Permutation& s : stab)
        if (s.cycle_type() == type) return true;
    return false;
}

}  // namespace

std::string stabilizer_label(const std::vector<Permutation>& stab, unsigned degree) {
    size_t n = stab.size();
    if (n == 1) return "trivial";
    if (n == factorial(degree)) return "S" + std::to_string(degree);

    auto orders = element_orders(stab);
    bool cyclic = std::find(orders.begin(), orders.end(), static_cast<unsigned>(n)) != orders.end();
    if (cyclic) {
        if (n == 2) {
            auto type = stab[0].is_identity() ? stab[1].cycle_type() : stab[0].cycle_type();
            return "C2^" + std::to_string(type.size());
        }
        if (n == 3 && degree >= 6) {
            for (const Permutation& s : stab)
                if (s.order() == 3)
                    return "C3^" + std::to_string(s.cycle_type().size());
        }
        return "C" + std::to_string(n);
    }
    if (n == 4) {  // non-cyclic: Klein four
        if (degree < 4) return "V4";
        return contains_cycle_type(stab, {2}) ? "V4^1" : "V4^2";
    }
    if (n == 6) {  // non-cyclic and non-abelian: S3
        if (degree < 5) return "S3";
        return contains_cycle_type(stab, {2}) ? "S3^1" : "S3^2";
    }
    if (n == 8 && !is_abelian(stab)) return "D8";
    if (n == 10 && !is_abelian(stab)) return "D10";
    if (n == 12) {
        if (orders.back() == 3) return "A4";
        if (!is_abelian(stab) && std::find(orders.begin(), orders.end(), 6u) != orders.end())
            return "D12";
    }
    if (n == 20 && !is_abelian(stab) && orders.back() == 5) return "D20";
    if (n == 24 && !is_abelian(stab) && orders.back() == 4) return "S4";
    if (n == 60 && orders.back() == 5) return "A5";
    return "G" + std::to_string(n);
}

std::string stabilizer_label_from_order(unsigned long long order) {
    if (order == 1) return "trivial";
    return "G" + std::to_string(order);
}

namespace {

// Open-addressed key -> index map; packed keys are never 0 (the low
// length bits are non-zero).
class FlatIndex {
public:
    explicit FlatIndex(size_t n) {
        size_t cap = 16;
        while (cap < 2 * n) cap <<= 1;
        slots_.assign(cap, {0, 0});
        mask_ = cap - 1;
    }
    void insert(std::uint64_t key, std::uint32_t idx) {
        size_t s = mix(key) & mask_;
        while (slots_[s].first != 0) s = (s + 1) & mask_;
        slots_[s] = {key, idx};
    }
    // SIZE_MAX when absent
    size_t find(std::uint64_t key) const {
        size_t s = mix(key) & mask_;
        while (slots_[s].first != 0) {
            if (slots_[s].first == key) return slots_[s].second;
            s = (s + 1) & mask_;
        }
        return SIZE_MAX;
    }

private:
    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    std::vector<std::pair<std::uint64_t, std::uint32_t>> slots_;
    size_t mask_ = 0;
};

}  // namespace

std::vector<OrbitReport> classify(unsigned k, const PrimeModulus& p, unsigned long long budget) {
    const unsigned d = k + 1;
    if (d > 12)
        throw UnsupportedError("classify: dimensions beyond 12 are not supported");
    std::vector<DiagonalSubgroup> subs = enumerate_subgroups(k, p, budget);

    FlatIndex index(subs.size());
    for (size_t i = 0; i < subs.size(); ++i)
        index.insert(pack_residue_vector(subs[i].canon), static_cast<std::uint32_t>(i));

    std::vector<char> visited(subs.size(), 0);
    std::vector<OrbitReport> reports;
    const long pv = p.value();
    const bool admissible = pv >= static_cast<long>(d);
    long scratch[12];

    // representatives are the least id vector of each orbit in the
    // admissible regime (the form the tables quote), else the least
    // canonical vector
    auto precedes = [&](const DiagonalSubgroup& a, const DiagonalSubgroup& b) {
        if (admissible) return a.id_vec->entries < b.id_vec->entries;
        return a.canon < b.canon;
    };

    for (size_t start = 0; start < subs.size(); ++start) {
        if (visited[start]) continue;
        // orbit expansion from an unvisited representative
        std::deque<size_t> queue;
        visited[start] = 1;
        queue.push_back(start);
        size_t least = start;
        unsigned long long size = 0;
        while (!queue.empty()) {
            size_t cur = queue.front();
            queue.pop_front();
            ++size;
            if (precedes(subs[cur], subs[least])) least = cur;
            const ResidueVector& v = subs[cur].canon;
            for (unsigned t = 0; t + 1 < d; ++t) {
                // adjacent transposition (t, t+1)
                for (unsigned i = 0; i < d; ++i) scratch[i] = v[i];
                std::swap(scratch[t], scratch[t + 1]);
                size_t next = index.find(canonical_key(scratch, d, pv));
                if (next == SIZE_MAX)
                    throw InternalConsistencyError("classify: orbit left the enumerated set");
                if (!visited[next]) {
                    visited[next] = 1;
                    queue.push_back(next);
                }
            }
        }
        OrbitReport r;
        r.representative = subs[least];
        r.orbit_size = size;
        unsigned long long group_order = factorial(d);
        if (group_order % size != 0)
            throw InternalConsistencyError("classify: orbit size does not divide the group order");
        if (d <= 7) {
            r.stabilizer = stabilizer(r.representative);
            if (r.stabilizer.size() != group_order / size)
                throw InternalConsistencyError("classify: orbit-stabilizer mismatch");
            r.stabilizer_label = stabilizer_label(r.stabilizer, d);
        } else {
            r.stabilizer_label = stabilizer_label_from_order(group_order / size);
        }
        reports.push_back(std::move(r));
    }

    std::sort(reports.begin(), reports.end(),
              [&](const OrbitReport& a, const OrbitReport& b) {
                  if (a.orbit_size != b.orbit_size) return a.orbit_size < b.orbit_size;
                  return precedes(a.representative, b.representative);
              });
    return reports;
}

}  // namespace pglcensus
