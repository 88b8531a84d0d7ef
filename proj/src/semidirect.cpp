#include "pglcensus/semidirect.hpp"

#include <algorithm>

#include "pglcensus/action.hpp"
#include "pglcensus/errors.hpp"

namespace pglcensus {

namespace {

const std::vector<std::string> kLabels = {
    "Int_12",          "Imp_123",        "Imp_S3",
    "Int_(13)(24)",    "Int_(123)",      "Imp_(1234)",
    "Int_(14)(23)",    "Int_(1234)_k4",  "Imp_(12345)",
    "Int_(14)(25)(36)", "Int_(135)(246)", "Int_(12345)_k5", "Imp_(123456)",
};

[[noreturn]] void unknown_label(const std::string& label) {
    throw UnsupportedError("unknown semidirect label '" + label + "'");
}

void require_gate(bool ok, const std::string& label, const std::string& gate) {
    if (!ok)
        throw std::domain_error("build_semidirect: " + label + " requires " + gate);
}

long pick_root(const std::vector<long>& poly, const PrimeModulus& p, const std::string& label) {
    auto roots = solve_univariate_congruence(poly, p);
    for (long r : roots)
        if (r != 0 && r != 1) return r;
    throw std::domain_error("build_semidirect: no admissible congruence solution for " + label);
}

// sigma(v) = m*v + c witness, or nullopt.
std::optional<std::pair<long, long>> closure_witness(const Permutation& sigma,
                                                     const ResidueVector& v,
                                                     const PrimeModulus& p) {
    for (long m = 1; m < p.value(); ++m) {
        // solve c from the first coordinate, then verify
        long c = p.sub(v[sigma.preimage(0)], p.mul(m, v[0]));
        bool ok = true;
        for (size_t i = 1; i < v.size() && ok; ++i)
            ok = v[sigma.preimage(i)] == p.add(p.mul(m, v[i]), c);
        if (ok) return std::make_pair(m, c);
    }
    return std::nullopt;
}

bool entries_distinct(const ResidueVector& v) {
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

}  // namespace

const std::vector<std::string>& semidirect_labels() { return kLabels; }

unsigned semidirect_degree(const std::string& label) {
    if (label == "Int_12" || label == "Imp_123" || label == "Imp_S3") return 3;
    if (label == "Int_(13)(24)" || label == "Int_(123)" || label == "Imp_(1234)") return 4;
    if (label == "Int_(14)(23)" || label == "Int_(1234)_k4" || label == "Imp_(12345)") return 5;
    if (label == "Int_(14)(25)(36)" || label == "Int_(135)(246)" ||
        label == "Int_(12345)_k5" || label == "Imp_(123456)")
        return 6;
    unknown_label(label);
}

SemidirectGroup build_semidirect(const std::string& label, const PrimeModulus& pm,
                                 const std::vector<long>& free_params) {
    const long p = pm.value();
    const unsigned d = semidirect_degree(label);
    SemidirectGroup g;
    g.label = label;
    g.p = p;

    ResidueVector v;
    std::vector<std::string> twist_texts;

    auto param = [&](size_t i, long fallback) {
        return i < free_params.size() ? pm.reduce(free_params[i]) : fallback;
    };

    if (label == "Int_12") {
        require_gate(p >= 3, label, "p >= 3");
        v = {p - 1, 1, 0};
        twist_texts = {"(1 2)"};
    } else if (label == "Imp_123") {
        require_gate(p % 3 == 1 || p == 3, label, "p = 1 (mod 3) or p = 3");
        long s = pick_root({1, -1, 1}, pm, label);  // s^2 - s + 1
        v = {s, 1, 0};
        twist_texts = {"(1 2 3)"};
    } else if (label == "Imp_S3") {
        require_gate(p == 3, label, "p = 3");
        v = {2, 1, 0};
        twist_texts = {"(1 2 3)", "(1 2)"};
    } else if (label == "Int_(13)(24)") {
        long s = param(0, 2);
        v = {s, pm.add(s, 1), 1, 0};
        require_gate(entries_distinct(v), label, "2 <= s <= p-2");
        twist_texts = {"(1 3)(2 4)"};
    } else if (label == "Int_(123)") {
        require_gate(p % 3 == 1, label, "p = 1 (mod 3)");
        long t = pick_root({1, 1, 1}, pm, label);  // t^2 + t + 1
        v = {pm.mul(t, t), t, 1, 0};
        twist_texts = {"(1 2 3)"};
    } else if (label == "Imp_(1234)") {
        require_gate(p % 4 == 1, label, "p = 1 (mod 4)");
        long s = pick_root({1, 0, 1}, pm, label);  // s^2 + 1
        v = {s, pm.add(s, 1), 1, 0};
        twist_texts = {"(1 2 3 4)"};
    } else if (label == "Int_(14)(23)") {
        long t = param(0, 2);
        v = {p - 1, t, pm.neg(t), 1, 0};
        require_gate(entries_distinct(v), label, "a parameter t with distinct entries");
        twist_texts = {"(1 4)(2 3)"};
    } else if (label == "Int_(1234)_k4") {
        require_gate(p % 4 == 1, label, "p = 1 (mod 4)");
        long t = pick_root({1, 0, 1}, pm, label);
        v = {pm.pow(t, 2), t, pm.pow(t, 3), 1, 0};
        twist_texts = {"(1 2 4 3)"};
    } else if (label == "Imp_(12345)") {
        require_gate(p % 5 == 1, label, "p = 1 (mod 5)");
        long s = pick_root({1, -1, 1, -1, 1}, pm, label);  // s^4-s^3+s^2-s+1
        v = {s, pm.reduce(-s * s + s), pm.reduce(s * s * s - s * s + s), 1, 0};
        twist_texts = {"(1 2 3 4 5)"};
    } else if (label == "Int_(14)(25)(36)") {
        long u = param(0, 3);
        long vv = param(1, 0);
        if (free_params.size() < 2) {
            // smallest v making all entries distinct
            for (long cand = 2; cand < p; ++cand) {
                ResidueVector trial = {pm.sub(u, cand), pm.sub(u, 1), u, cand, 1, 0};
                if (entries_distinct(trial)) { vv = cand; break; }
            }
        }
        v = {pm.sub(u, vv), pm.sub(u, 1), u, vv, 1, 0};
        require_gate(entries_distinct(v), label, "parameters (u, v) with distinct entries");
        twist_texts = {"(1 4)(2 5)(3 6)"};
    } else if (label == "Int_(135)(246)") {
        require_gate(p % 3 == 1, label, "p = 1 (mod 3)");
        long i = *roots_of_unity_mod_p(3, pm, true).begin();
        long i2 = pm.mul(i, i);
        long vv = param(0, 0);
        auto make = [&](long w) {
            return ResidueVector{pm.sub(i2, pm.mul(i2, w)), pm.neg(pm.mul(i2, w)),
                                 pm.add(i, w), w, 1, 0};
        };
        if (free_params.empty()) {
            for (long cand = 2; cand < p; ++cand)
                if (entries_distinct(make(cand))) { vv = cand; break; }
        }
        v = make(vv);
        require_gate(entries_distinct(v), label, "a parameter v with distinct entries");
        twist_texts = {"(1 3 5)(2 4 6)"};
    } else if (label == "Int_(12345)_k5") {
        require_gate(p % 5 == 1, label, "p = 1 (mod 5)");
        long w = pick_root({1, 1, 1, 1, 1}, pm, label);  // v^4+v^3+v^2+v+1
        v = {pm.pow(w, 4), pm.pow(w, 3), pm.pow(w, 2), w, 1, 0};
        twist_texts = {"(1 2 3 4 5)"};
    } else if (label == "Imp_(123456)") {
        require_gate(p % 3 == 1, label, "p = 1 (mod 3)");
        long s = pick_root({1, 1, 1}, pm, label);  // s^2 + s + 1
        long t = pm.reduce(-s * s + s);
        long u = pm.reduce(s * s * s - s * s + s);
        long w = pm.reduce(-(s * s * s * s) + s * s * s - s * s + s);
        v = {s, t, u, w, 1, 0};
        twist_texts = {"(1 2 3 4 5 6)"};
    } else {
        unknown_label(label);
    }

    g.diag.p = p;
    g.diag.entries = v;
    for (const std::string& text : twist_texts) {
        Permutation sigma = Permutation::from_cycles(text, d);
        auto w = closure_witness(sigma, v, pm);
        if (!w) {
            // the inverse generator may be the one normalizing under
            // this action convention
            sigma = sigma.inverse();
            w = closure_witness(sigma, v, pm);
        }
        if (!w)
            throw InternalConsistencyError("build_semidirect: closure invariant failed for " +
                                           label + " at p=" + std::to_string(p));
        g.twists.push_back(sigma);
        g.witnesses.push_back(*w);
    }
    return g;
}

Rat semidirect_table_formula(const std::string& label, const PrimeModulus& pm) {
    const long p = pm.value();
    auto gate = [&](long mod) { return p % mod == 1; };
    if (label == "Int_12") return rat(1);
    if (label == "Imp_123") return rat(gate(3) ? 1 : 0);
    if (label == "Imp_S3") return rat(p == 3 ? 1 : 0);
    if (label == "Int_(13)(24)") return rat(3 * (p - 3), 12);
    if (label == "Int_(123)") return rat(gate(3) ? 1 : 0);
    if (label == "Imp_(1234)") return rat(gate(4) ? 1 : 0);
    if (label == "Int_(14)(23)") return rat(15 * (p - 3), 60);
    if (label == "Int_(1234)_k4") return rat(gate(4) ? 1 : 0);
    if (label == "Imp_(12345)") return rat(gate(5) ? 1 : 0);
    if (label == "Int_(14)(25)(36)") return rat(15 * (p - 3) * (p - 5), 360);
    if (label == "Int_(135)(246)") return gate(3) ? rat(2 * (p - 4) * 20, 240) : rat(0);
    if (label == "Int_(12345)_k5") return rat(gate(5) ? 1 : 0);
    if (label == "Imp_(123456)") return rat(gate(3) ? 1 : 0);
    unknown_label(label);
}

long long count_semidirect_classes(const std::string& label, const PrimeModulus& pm) {
    const long p = pm.value();
    auto gate = [&](long mod) { return p % mod == 1; };
    // Where a longer cycle's solutions sit inside a shorter one's
    // (4-cycles inside the 2x2 pool, 6-cycles inside the 2x2x2 and 3x3
    // pools), the classes they absorb still contain the shorter cycle
    // type, so they are added back after the overlap subtraction.
    if (label == "Int_12") return 1;
    if (label == "Imp_123") return gate(3) ? 1 : 0;
    if (label == "Imp_S3") return p == 3 ? 1 : 0;
    if (label == "Int_(13)(24)")
        return gate(4) ? 3 * (p - 5) / 12 + 1 : 3 * (p - 3) / 12;
    if (label == "Int_(123)") return gate(3) ? 1 : 0;
    if (label == "Imp_(1234)") return gate(4) ? 1 : 0;
    if (label == "Int_(14)(23)")
        return gate(4) ? 15 * (p - 5) / 60 + 1 : 15 * (p - 3) / 60;
    if (label == "Int_(1234)_k4") return gate(4) ? 1 : 0;
    if (label == "Imp_(12345)") return gate(5) ? 1 : 0;
    if (label == "Int_(14)(25)(36)")
        return gate(3) ? (15 * (p - 3) * (p - 5) - 120) / 360 + 1
                       : 15 * (p - 3) * (p - 5) / 360;
    if (label == "Int_(135)(246)") return gate(3) ? (40 * (p - 4) - 120) / 240 + 1 : 0;
    if (label == "Int_(12345)_k5") return gate(5) ? 1 : 0;
    if (label == "Imp_(123456)") return gate(3) ? 1 : 0;
    unknown_label(label);
}

}  // namespace pglcensus
