#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pglcensus/census.hpp"
#include "pglcensus/congruence.hpp"
#include "pglcensus/errors.hpp"
#include "pglcensus/gale.hpp"
#include "pglcensus/matrix_io.hpp"
#include "pglcensus/semidirect.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pglcensus;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // a negative mathematical answer
constexpr int kExitDomain = 2;     // unsupported or invalid mathematics
constexpr int kExitUsage = 64;     // flag errors
constexpr int kExitInternal = 70;  // consistency failures (bugs)

json census_to_json(const ClassCensus& c) {
    json j = json::object();
    j["k"] = c.k;
    j["p"] = c.p;
    j["method"] = census_method_name(c.method);
    j["total"] = c.total;
    if (c.has_breakdown) {
        json rows = json::array();
        for (const auto& r : c.breakdown) {
            json row = json::object();
            row["label"] = r.label;
            row["classes"] = r.num_classes;
            row["orbit"] = r.orbit_size;
            rows.push_back(std::move(row));
        }
        j["breakdown"] = std::move(rows);
    }
    return j;
}

void print_census_text(const ClassCensus& c, std::ostream& out) {
    out << "k=" << c.k << " p=" << c.p << " method=" << census_method_name(c.method)
        << " total=" << c.total << "\n";
    if (c.has_breakdown)
        for (const auto& r : c.breakdown)
            out << "  " << r.label << ": " << r.num_classes << " classes of length "
                << r.orbit_size << "\n";
}

void print_census_csv(const ClassCensus& c, std::ostream& out) {
    out << "k,p,method,total,label,classes,orbit\n";
    if (c.has_breakdown) {
        for (const auto& r : c.breakdown)
            out << c.k << "," << c.p << "," << census_method_name(c.method) << "," << c.total
                << "," << r.label << "," << r.num_classes << "," << r.orbit_size << "\n";
    } else {
        out << c.k << "," << c.p << "," << census_method_name(c.method) << "," << c.total
            << ",,,\n";
    }
}

json record(const std::string& command, json parameters, const std::string& provenance) {
    json j = json::object();
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["provenance"] = provenance;
    return j;
}

ClassCensus dispatch_count(unsigned k, long p, const std::string& method,
                           unsigned long long budget) {
    PrimeModulus pm(p);
    if (method == "closed") return count_closed_form(k, pm);
    if (method == "brute") return count_brute_force(k, pm, budget);
    if (method == "duality") return count_duality(k, pm);
    // auto
    if (k >= 2 && k <= 5 && p >= static_cast<long>(k + 1)) return count_closed_form(k, pm);
    try {
        return count_duality(k, pm);
    } catch (const UnsupportedError&) {
        return count_brute_force(k, pm, budget);
    }
}

// ---- paper table reproduction ----------------------------------------

void emit_example_table(unsigned k, const std::vector<long>& primes,
                        const std::vector<long>& orbit_order, std::ostream& out) {
    out << "p,classes,m_H\n";
    for (long p : primes) {
        ClassCensus c = count_closed_form(k, PrimeModulus(p));
        for (long m : orbit_order)
            for (const auto& r : c.breakdown)
                if (r.orbit_size == m)
                    out << p << "," << r.num_classes << "," << r.orbit_size << "\n";
    }
}

int cmd_tables(const std::string& which, std::ostream& out) {
    if (which == "k2") {
        emit_example_table(2, {5, 7, 17, 19}, {2, 3, 6}, out);
    } else if (which == "k3") {
        emit_example_table(3, {11, 7, 17, 13}, {6, 8, 12, 24}, out);
    } else if (which == "k4") {
        emit_example_table(4, {7, 13, 11, 41}, {24, 30, 60, 120}, out);
    } else if (which == "k5") {
        emit_example_table(5, {17, 11, 13, 31}, {120, 144, 360, 240, 720}, out);
    } else if (which == "t15") {
        out << "p,a_values,classes\n";
        for (long p : {5L, 7L, 11L, 13L}) {
            // group the residues 0..p-1 by their class count
            std::vector<std::pair<std::vector<long>, long long>> groups;
            for (long a = 0; a < p; ++a) {
                unsigned k = static_cast<unsigned>(p + a - 1);  // k+1 = p + a > p
                long long total = count_duality(k, PrimeModulus(p)).total;
                bool merged = false;
                for (auto& g : groups)
                    if (g.second == total) { g.first.push_back(a); merged = true; break; }
                if (!merged) groups.push_back({{a}, total});
            }
            for (auto& g : groups) {
                out << p << ",";
                for (size_t i = 0; i < g.first.size(); ++i)
                    out << (i ? ";" : "") << g.first[i];
                out << "," << g.second << "\n";
            }
        }
    } else if (which == "t16") {
        out << "k_plus_1,classes\n";
        for (long k1 : {19L, 18L, 17L, 16L, 15L, 14L, 13L})
            out << k1 << ","
                << count_duality(static_cast<unsigned>(k1 - 1), PrimeModulus(19)).total << "\n";
    } else if (which == "s4") {
        out << "k,group,parity,classes\n"
               "2,Int_12,any,1\n"
               "2,Imp_123,p=1 (mod 3),1\n"
               "2,Imp_S3,p=3,1\n"
               "3,Int_(13)(24),any,3*(p-3)/12\n"
               "3,Int_(123),p=1 (mod 3),1\n"
               "3,Imp_(1234),p=1 (mod 4),1\n"
               "4,Int_(14)(23),any,15*(p-3)/60\n"
               "4,Int_(1234),p=1 (mod 4),1\n"
               "4,Imp_(12345),p=1 (mod 5),1\n"
               "5,Int_(14)(25)(36),any,15*(p-3)*(p-5)/360\n"
               "5,Int_(135)(246),p=1 (mod 3),2*(p-4)*20/240\n"
               "5,Int_(12345),p=1 (mod 5),1\n"
               "5,Imp_(123456),p=1 (mod 3),1\n";
    } else {
        std::cerr << "unknown table name '" << which
                  << "' (expected k2|k3|k4|k5|t15|t16|s4)\n";
        return kExitUsage;
    }
    return kExitOk;
}

// ---- verify -----------------------------------------------------------

int cmd_verify(long max_p, unsigned max_k, unsigned long long budget, std::ostream& out) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok, double seconds,
                     const std::string& detail = "") {
        out << (ok ? "pass" : "FAIL") << "  " << name << "  (" << std::fixed
            << std::setprecision(2) << seconds << "s)";
        if (!ok && !detail.empty()) out << "  " << detail;
        out << "\n";
        if (!ok) ++failures;
    };

    for (unsigned k = 2; k <= max_k; ++k) {
        for (long p = 2; p <= max_p; ++p) {
            if (!is_prime(p)) continue;
            if (p >= static_cast<long>(k + 1) &&
                falling_factorial(p - 2, k - 1) > budget)
                continue;
            // block regime: only the small primes here; the bigger
            // block shapes run in the acceptance suite
            if (p < static_cast<long>(k + 1) && p > 3) continue;
            auto t0 = std::chrono::steady_clock::now();
            ReconcileReport r = reconcile(k, PrimeModulus(p), budget);
            double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            check("reconcile k=" + std::to_string(k) + " p=" + std::to_string(p), r.equal, dt,
                  r.detail);
        }
    }

    // association checks
    {
        auto t0 = std::chrono::steady_clock::now();
        PrimeModulus p11(11);
        IdVector h{11, {4, 2, 1, 0}};
        CoordMatrix A = orbit_point_set(h.entries, p11);
        CoordMatrix B = orbit_point_set(associated_generator(h, p11), p11);
        bool ok = association_check(A, B, identity_witness(A));
        for (unsigned l = 2; l <= 3 && ok; ++l) {
            BlockExpansion be = block_expand(h, p11, l);
            CoordMatrix A1 = multi_orbit_point_set(h.entries, p11, be.first_bases);
            CoordMatrix B1 = multi_orbit_point_set(be.generator, p11, be.second_bases);
            ok = association_check(A1, B1, identity_witness(A1));
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        check("association p=11 orbit pair and multi-orbit expansions", ok, dt);
    }

    out << (failures == 0 ? "verify: all checks passed\n"
                          : "verify: " + std::to_string(failures) + " check(s) FAILED\n");
    return failures == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census of conjugacy classes of admissible cyclic subgroups of PGL_{k+1}(C) "
                 "of prime order, with Gale-association tooling"};
    app.require_subcommand(1);

    unsigned long long budget = enumeration_budget();

    // count
    auto* count = app.add_subcommand("count", "Count conjugacy classes for (k, p)");
    unsigned count_k = 0;
    long count_p = 0;
    std::string count_method = "auto";
    std::string count_format = "text";
    count->add_option("--k", count_k, "k (PGL_{k+1})")->required();
    count->add_option("--p", count_p, "prime p")->required();
    count->add_option("--method", count_method, "closed|brute|duality|auto")
        ->check(CLI::IsMember({"closed", "brute", "duality", "auto"}));
    count->add_option("--format", count_format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "List the orbits with stabilizers");
    unsigned cls_k = 0;
    long cls_p = 0;
    classify_cmd->add_option("--k", cls_k)->required();
    classify_cmd->add_option("--p", cls_p)->required();

    // stabilizer
    auto* stab = app.add_subcommand("stabilizer", "Stabilizer of a diagonal subgroup");
    unsigned stab_k = 0;
    long stab_p = 0;
    std::string stab_vector;
    stab->add_option("--k", stab_k)->required();
    stab->add_option("--p", stab_p)->required();
    stab->add_option("--vector", stab_vector, "comma-separated residues")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "Admissible solutions of a stabilizer congruence");
    unsigned solve_k = 0;
    long solve_p = 0;
    std::string solve_perm;
    solve->add_option("--k", solve_k)->required();
    solve->add_option("--p", solve_p)->required();
    solve->add_option("--perm", solve_perm, "cycle notation, e.g. \"(14)(25)(36)\"")->required();

    // associate
    auto* assoc = app.add_subcommand("associate", "Associated generator (negated complement)");
    long assoc_p = 0;
    std::string assoc_vector;
    std::string assoc_format = "text";
    assoc->add_option("--p", assoc_p)->required();
    assoc->add_option("--vector", assoc_vector)->required();
    assoc->add_option("--format", assoc_format)->check(CLI::IsMember({"json", "text"}));

    // block-expand
    auto* bexp = app.add_subcommand("block-expand", "Multi-orbit association construction");
    long bexp_p = 0;
    unsigned bexp_l = 2;
    std::string bexp_vector;
    bexp->add_option("--p", bexp_p)->required();
    bexp->add_option("--vector", bexp_vector)->required();
    bexp->add_option("--l", bexp_l, "number of orbits")->required();

    // gale
    auto* gale = app.add_subcommand("gale", "Association / Gale transform on matrix files");
    gale->require_subcommand(1);
    auto* gale_check = gale->add_subcommand("check", "Verify M_A Lambda M_B^T = 0");
    auto* gale_transform_cmd = gale->add_subcommand("transform", "Gale transform of a point set");
    auto* gale_lambda = gale->add_subcommand("lambda", "Decide association, produce a witness");
    std::string gale_a, gale_b, gale_lambda_file, gale_out;
    for (auto* sc : {gale_check, gale_transform_cmd, gale_lambda})
        sc->add_option("--a", gale_a, "point-set matrix file")->required();
    for (auto* sc : {gale_check, gale_lambda})
        sc->add_option("--b", gale_b, "second point-set matrix file")->required();
    gale_check->add_option("--lambda", gale_lambda_file, "diagonal witness file (default: identity)");
    gale_transform_cmd->add_option("--out", gale_out, "output file (default: stdout)");

    // semidirect
    auto* semi = app.add_subcommand("semidirect", "Build or count the semidirect families");
    std::string semi_label;
    long semi_p = 0;
    bool semi_count_only = false;
    std::vector<long> semi_params;
    semi->add_option("--label", semi_label, "family label, e.g. Int_(13)(24)")->required();
    semi->add_option("--p", semi_p)->required();
    semi->add_flag("--count", semi_count_only, "print the class count only");
    semi->add_option("--params", semi_params, "free parameters of the family");

    // tables
    auto* tables = app.add_subcommand("tables", "Reproduce a table as CSV");
    std::string tables_which;
    tables->add_option("--which", tables_which, "k2|k3|k4|k5|t15|t16|s4")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the reconciliation suite");
    long verify_max_p = 31;
    unsigned verify_max_k = 5;
    verify->add_option("--max-p", verify_max_p);
    verify->add_option("--max-k", verify_max_k);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*count) {
            ClassCensus c = dispatch_count(count_k, count_p, count_method, budget);
            if (count_format == "json") {
                json j = record("count",
                                {{"k", count_k}, {"p", count_p}, {"method", count_method}},
                                census_method_name(c.method));
                j["census"] = census_to_json(c);
                std::cout << j.dump(2) << "\n";
            } else if (count_format == "csv") {
                print_census_csv(c, std::cout);
            } else {
                print_census_text(c, std::cout);
            }
            return kExitOk;
        }

        if (*classify_cmd) {
            PrimeModulus pm(cls_p);
            auto reports = classify(cls_k, pm, budget);
            json j = record("classify", {{"k", cls_k}, {"p", cls_p}}, "brute_force");
            json rows = json::array();
            for (const auto& r : reports) {
                json row = json::object();
                row["representative"] = residue_vector_to_string(r.representative.canon);
                if (r.representative.id_vec)
                    row["id_vector"] = residue_vector_to_string(r.representative.id_vec->entries);
                row["orbit_size"] = r.orbit_size;
                row["stabilizer_label"] = r.stabilizer_label;
                if (!r.stabilizer.empty()) {
                    json st = json::array();
                    for (const auto& s : r.stabilizer) st.push_back(s.to_cycle_string());
                    row["stabilizer"] = std::move(st);
                }
                rows.push_back(std::move(row));
            }
            j["classes"] = std::move(rows);
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*stab) {
            PrimeModulus pm(stab_p);
            ResidueVector v = residue_vector_from_string(stab_vector);
            if (v.size() != stab_k + 1)
                throw std::domain_error("--vector must have k+1 entries");
            DiagonalSubgroup g = make_subgroup(v, pm);
            auto st = stabilizer(g);
            json j = record("stabilizer",
                            {{"k", stab_k}, {"p", stab_p}, {"vector", stab_vector}},
                            "exhaustive");
            json arr = json::array();
            for (const auto& s : st) arr.push_back(s.to_cycle_string());
            j["stabilizer"] = std::move(arr);
            j["label"] = stabilizer_label(st, stab_k + 1);
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*solve) {
            PrimeModulus pm(solve_p);
            Permutation sigma = Permutation::from_cycles(solve_perm, solve_k + 1);
            auto ss = stabilizer_solutions(sigma, solve_k, pm);
            json j = record("solve",
                            {{"k", solve_k}, {"p", solve_p}, {"perm", sigma.to_cycle_string()}},
                            "two-route (enumeration = linear solver)");
            json sols = json::array();
            for (const auto& iv : ss.solutions) {
                json one = json::object();
                one["vector"] = residue_vector_to_string(iv.entries);
                auto w = ss.scaling_witnesses.at(iv.entries);
                one["witness"] = json::array({w.first, w.second});
                sols.push_back(std::move(one));
            }
            j["count"] = ss.solutions.size();
            j["solutions"] = std::move(sols);
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*assoc) {
            PrimeModulus pm(assoc_p);
            ResidueVector v = residue_vector_from_string(assoc_vector);
            IdVector h = normalize(v, pm);
            if (h.entries != v)
                throw std::domain_error("associate: --vector must be an id vector "
                                        "(last entry 0, second-to-last 1)");
            ResidueVector gen = associated_generator(h, pm);
            if (assoc_format == "json") {
                json j = record("associate", {{"p", assoc_p}, {"vector", assoc_vector}},
                                "negated complement");
                j["generator"] = residue_vector_to_string(gen);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << residue_vector_to_string(gen) << "\n";
            }
            return kExitOk;
        }

        if (*bexp) {
            PrimeModulus pm(bexp_p);
            ResidueVector v = residue_vector_from_string(bexp_vector);
            IdVector h = normalize(v, pm);
            BlockExpansion be = block_expand(h, pm, bexp_l);
            json j = record("block-expand",
                            {{"p", bexp_p}, {"vector", bexp_vector}, {"l", bexp_l}},
                            "multi-orbit construction");
            j["generator"] = residue_vector_to_string(be.generator);
            auto points_json = [](const std::vector<std::vector<Rat>>& pts) {
                json arr = json::array();
                for (const auto& pt : pts) {
                    json one = json::array();
                    for (const Rat& x : pt) one.push_back(rat_to_string(x));
                    arr.push_back(std::move(one));
                }
                return arr;
            };
            j["first_bases"] = points_json(be.first_bases);
            j["second_bases"] = points_json(be.second_bases);
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*gale) {
            if (*gale_check) {
                CoordMatrix A = read_coord_matrix_file(gale_a);
                CoordMatrix B = read_coord_matrix_file(gale_b);
                AssociationWitness w = gale_lambda_file.empty()
                                           ? identity_witness(A)
                                           : read_witness_file(gale_lambda_file, A);
                bool ok = association_check(A, B, w);
                std::cout << (ok ? "associated: exact zero product\n"
                                 : "not associated under this witness\n");
                return ok ? kExitOk : kExitNegative;
            }
            if (*gale_transform_cmd) {
                CoordMatrix A = read_coord_matrix_file(gale_a);
                CoordMatrix G = gale_transform(A);
                if (gale_out.empty())
                    write_coord_matrix(std::cout, G);
                else
                    write_coord_matrix_file(gale_out, G);
                return kExitOk;
            }
            if (*gale_lambda) {
                CoordMatrix A = read_coord_matrix_file(gale_a);
                CoordMatrix B = read_coord_matrix_file(gale_b);
                auto w = find_association_lambda(A, B);
                if (!w) {
                    std::cout << "not associated\n";
                    return kExitNegative;
                }
                CoordMatrix out = CoordMatrix::zero(A.field, 1, A.cols);
                for (size_t c = 0; c < A.cols; ++c) out.at(0, c) = w->lambda[c];
                write_coord_matrix(std::cout, out);
                return kExitOk;
            }
        }

        if (*semi) {
            PrimeModulus pm(semi_p);
            if (semi_count_only) {
                std::cout << count_semidirect_classes(semi_label, pm) << "\n";
                return kExitOk;
            }
            SemidirectGroup g = build_semidirect(semi_label, pm, semi_params);
            json j = record("semidirect", {{"label", semi_label}, {"p", semi_p}},
                            "generator construction");
            j["label"] = g.label;
            j["p"] = g.p;
            j["diag"] = residue_vector_to_string(g.diag.entries);
            json tw = json::array(), ws = json::array();
            for (size_t i = 0; i < g.twists.size(); ++i) {
                tw.push_back(g.twists[i].to_cycle_string());
                ws.push_back(json::array({g.witnesses[i].first, g.witnesses[i].second}));
            }
            j["twist"] = g.twists.size() == 1 ? json(g.twists[0].to_cycle_string()) : tw;
            j["witness"] = g.witnesses.size() == 1
                               ? json(json::array({g.witnesses[0].first, g.witnesses[0].second}))
                               : ws;
            j["table_formula"] = rat_to_string(semidirect_table_formula(semi_label, pm));
            j["count"] = count_semidirect_classes(semi_label, pm);
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (*tables) return cmd_tables(tables_which, std::cout);

        if (*verify) return cmd_verify(verify_max_p, verify_max_k, budget, std::cout);
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitDomain;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
