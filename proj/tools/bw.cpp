// Command-line front end: solve / verify / dims / basis / positivity /
// relations, with JSON documents on stdout (or --out) and machine-readable
// errors on stderr.  Exit codes: 0 all checks pass, 1 failed checks or
// residuals over tolerance, 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "bw/bethe.hpp"
#include "bw/json_io.hpp"
#include "bw/parallel.hpp"
#include "bw/solver.hpp"
#include "bw/symfunc.hpp"

using namespace bw;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "0") return {};
    std::vector<int> parts;
    for (const auto& tok : split_commas(s)) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

std::vector<Rat> parse_scalars(const std::string& s) {
    std::vector<Rat> out;
    for (const auto& tok : split_commas(s)) out.push_back(rat_from_string(tok));
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split_commas(s)) out.push_back(std::stoi(tok));
    return out;
}

void emit(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(1);
    text += '\n';
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text;
    }
}

Rat random_rat(std::mt19937_64& rng, int num_lo, int num_hi, int den_hi) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    Rat q(0);
    do {
        q = rat(num(rng), den(rng));
    } while (q == 0);
    return q;
}

json report_to_json(const IdentityReport& r) {
    json v = json::array();
    for (const auto& viol : r.violations) {
        v.push_back(json{{"kind", viol.kind},
                         {"lam", partition_to_json(viol.lam)},
                         {"mu", partition_to_json(viol.mu)},
                         {"relation_index", viol.relation_index},
                         {"detail", viol.detail}});
    }
    return json{{"checked", r.checked}, {"violations", std::move(v)}};
}

int run_solve(const Partition& nu, const std::vector<Rat>& zq, SolveConfig cfg,
              const std::string& out_path) {
    std::vector<double> z;
    for (const auto& q : zq) z.push_back(to_double(q));
    auto sols = solve_inverse_wronski(nu, z, cfg);
    json solutions = json::array();
    bool all_pass = true;
    for (const auto& s : sols) {
        auto check = verify_solution(s, nu, z, cfg.residual_tol);
        all_pass = all_pass && check.pass && s.residuals.eigen <= 1e-6;
        solutions.push_back(solution_to_json(s));
    }
    json zs = json::array();
    for (const auto& q : zq) zs.push_back(scalar_to_string(q));
    json doc{{"command", "solve"},
             {"nu", partition_to_json(nu)},
             {"z", std::move(zs)},
             {"seed", cfg.seed},
             {"tol_cluster", cfg.cluster_tol},
             {"tol_residual", cfg.residual_tol},
             {"count", solutions.size()},
             {"solutions", std::move(solutions)}};
    emit(doc, out_path);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plucker-coordinate operators, inverse Wronski solving, and identity checks"};
    app.require_subcommand(1);

    std::string nu_s, z_s, kappa_s, which = "plucker-all", form = "seminormal";
    std::string out_path, in_path, gr_s, t_s = "-1";
    std::uint64_t seed = 0;
    double tol_cluster = 1e-7, tol_residual = 1e-8, tol_pos = 1e-9;
    int n_arg = 0, trials = 3, d_arg = 0;
    bool list_relations = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--out", out_path, "write the JSON document to this path");
        c->add_option("--seed", seed, "seed for every randomized step (recorded in output)");
    };

    auto* solve = app.add_subcommand("solve", "solve the inverse Wronski problem on a cell");
    solve->add_option("--nu", nu_s, "cell partition, comma-separated")->required();
    solve->add_option("--z", z_s, "parameters, comma-separated rationals or decimals")->required();
    solve->add_option("--tol-cluster", tol_cluster, "eigenvalue clustering tolerance");
    solve->add_option("--tol-residual", tol_residual, "residual acceptance tolerance");
    add_common(solve);

    auto* verify = app.add_subcommand("verify", "verify operator identities exactly");
    verify->add_option("--n", n_arg, "check every cell partition of this size")->required();
    verify->add_option("--which", which,
                       "commutativity|translation|plucker-single-column|plucker-single-row|plucker-all");
    verify->add_option("--z", z_s, "explicit rational parameters (default: seeded random)");
    verify->add_option("--trials", trials, "number of seeded (z,s,t) draws");
    verify->add_option("--form", form, "seminormal|orthogonal (exact checks need seminormal)");
    add_common(verify);

    auto* dims = app.add_subcommand("dims", "dimension table for repeated parameters");
    dims->add_option("--kappa", kappa_s, "root multiplicities, comma-separated")->required();
    dims->add_option("--nu", nu_s, "restrict to one cell partition");
    add_common(dims);

    auto* basis = app.add_subcommand("basis", "echelon and shifted bases per solution");
    basis->add_option("--nu", nu_s, "cell partition (solve mode)");
    basis->add_option("--z", z_s, "parameters (solve mode)");
    basis->add_option("--in", in_path, "solutions document from a previous solve");
    basis->add_option("--t", t_s, "shift for the second basis (must avoid the z values)");
    basis->add_option("--d", d_arg, "number of basis vectors (default: length of nu)");
    basis->add_option("--tol-cluster", tol_cluster, "eigenvalue clustering tolerance");
    basis->add_option("--tol-residual", tol_residual, "residual acceptance tolerance");
    add_common(basis);

    auto* positivity = app.add_subcommand("positivity", "positivity verdicts per solution");
    positivity->add_option("--nu", nu_s, "cell partition (solve mode)");
    positivity->add_option("--z", z_s, "parameters (solve mode)");
    positivity->add_option("--in", in_path, "solutions document from a previous solve");
    positivity->add_option("--tol", tol_pos, "positivity tolerance");
    positivity->add_option("--tol-cluster", tol_cluster, "eigenvalue clustering tolerance");
    positivity->add_option("--tol-residual", tol_residual, "residual acceptance tolerance");
    add_common(positivity);

    auto* relations = app.add_subcommand("relations", "relation count/listing for one Grassmannian");
    relations->add_option("--gr", gr_s, "d,m of the Grassmannian")->required();
    relations->add_option("--which", which, "plucker-all|plucker-single-column|plucker-single-row");
    relations->add_flag("--list", list_relations, "include the relation terms");
    add_common(relations);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*solve) {
            return run_solve(parse_partition(nu_s), parse_scalars(z_s),
                             SolveConfig{seed, tol_cluster, tol_residual, 8}, out_path);
        }

        if (*verify) {
            IdentityFamily fam{};
            bool relation_family = false;
            RelationFamily rfam = RelationFamily::all;
            if (which == "commutativity")
                fam = IdentityFamily::commutativity;
            else if (which == "translation")
                fam = IdentityFamily::translation;
            else if (which == "plucker-single-column") {
                relation_family = true;
                rfam = RelationFamily::single_column;
            } else if (which == "plucker-single-row") {
                relation_family = true;
                rfam = RelationFamily::single_row;
            } else if (which == "plucker-all") {
                relation_family = true;
                rfam = RelationFamily::all;
            } else
                throw std::invalid_argument("unknown --which value: " + which);
            if (form != "seminormal")
                throw std::invalid_argument("exact verification requires --form seminormal");

            std::mt19937_64 rng(seed);
            json per_trial = json::array();
            bool all_pass = true;
            long long checked = 0;
            /* relation lists do not depend on the cell or the parameters;
             * generate them once */
            std::vector<PluckerRelation> relations;
            if (relation_family) relations = plucker_relations(n_arg, 2 * n_arg, rfam);
            auto nus = partitions_of(n_arg);
            for (int trial = 0; trial < trials; ++trial) {
                ZParams<Rat> z;
                if (!z_s.empty()) {
                    z.values = parse_scalars(z_s);
                    if (static_cast<int>(z.values.size()) != n_arg)
                        throw std::invalid_argument("--z length must equal --n");
                } else {
                    for (int i = 0; i < n_arg; ++i) z.values.push_back(random_rat(rng, 1, 12, 4));
                }
                Rat s = random_rat(rng, -9, 9, 3), t = random_rat(rng, -9, 9, 3);
                /* cells are independent; results are slotted by index so
                 * the document is identical at any BW_THREADS */
                std::vector<json> slots(nus.size());
                std::vector<long long> slot_checked(nus.size(), 0);
                std::vector<char> slot_pass(nus.size(), 1);
                parallel_for(nus.size(), [&](size_t i) {
                    auto rep = build_rep<Rat>(nus[i]);
                    IdentityReport r;
                    if (relation_family) {
                        BetheBuilder<Rat> b(rep, z);
                        check_relations_on_operators(b, relations, s, r);
                    } else {
                        r = verify_identities(rep, z, fam, {{s, t}});
                    }
                    slot_checked[i] = r.checked;
                    slot_pass[i] = r.passed() ? 1 : 0;
                    slots[i] = json{{"nu", partition_to_json(nus[i])}, {"report", report_to_json(r)}};
                });
                json per_nu = json::array();
                for (size_t i = 0; i < nus.size(); ++i) {
                    checked += slot_checked[i];
                    all_pass = all_pass && slot_pass[i];
                    per_nu.push_back(std::move(slots[i]));
                }
                json ztexts = json::array();
                for (const auto& q : z.values) ztexts.push_back(scalar_to_string(q));
                per_trial.push_back(json{{"z", std::move(ztexts)},
                                         {"s", scalar_to_string(s)},
                                         {"t", scalar_to_string(t)},
                                         {"per_nu", std::move(per_nu)}});
            }
            json doc{{"command", "verify"}, {"n", n_arg},       {"which", which},
                     {"seed", seed},        {"trials", trials}, {"checked", checked},
                     {"pass", all_pass},    {"results", std::move(per_trial)}};
            emit(doc, out_path);
            return all_pass ? 0 : 1;
        }

        if (*dims) {
            auto kappa = parse_ints(kappa_s);
            json doc{{"command", "dims"}, {"kappa", kappa}};
            if (!nu_s.empty()) {
                Partition nu = parse_partition(nu_s);
                doc["nu"] = partition_to_json(nu);
                doc["dimension"] = bethe_dimension(nu, kappa);
                doc["total"] = bethe_dimension(std::nullopt, kappa);
            } else {
                int n = 0;
                for (int k : kappa) n += k;
                json per_nu = json::object();
                long long total = 0;
                for (const auto& nu : partitions_of(n)) {
                    long long v = bethe_dimension(nu, kappa);
                    total += v;
                    std::string key;
                    for (int i = 1; i <= nu.length(); ++i)
                        key += (i > 1 ? "," : "") + std::to_string(nu.part(i));
                    per_nu[key.empty() ? "0" : key] = v;
                }
                doc["per_nu"] = std::move(per_nu);
                doc["total"] = total;
            }
            emit(doc, out_path);
            return 0;
        }

        if (*basis || *positivity) {
            json source;
            Partition nu;
            std::vector<Rat> zq;
            if (!in_path.empty()) {
                if (in_path == "-") {
                    std::cin >> source;
                } else {
                    std::ifstream f(in_path);
                    if (!f) throw std::invalid_argument("cannot read --in file: " + in_path);
                    f >> source;
                }
                nu = partition_from_json(source.at("nu"));
                for (const auto& zs : source.at("z"))
                    zq.push_back(rat_from_string(zs.get<std::string>()));
            } else {
                if (nu_s.empty() || z_s.empty())
                    throw std::invalid_argument("need --in, or --nu and --z");
                nu = parse_partition(nu_s);
                zq = parse_scalars(z_s);
                std::vector<double> z;
                for (const auto& q : zq) z.push_back(to_double(q));
                auto sols =
                    solve_inverse_wronski(nu, z, SolveConfig{seed, tol_cluster, tol_residual, 8});
                json solutions = json::array();
                for (const auto& s : sols) solutions.push_back(solution_to_json(s));
                source = json{{"nu", partition_to_json(nu)}, {"solutions", std::move(solutions)}};
            }
            std::vector<PluckerVector<double>> deltas;
            for (const auto& s : source.at("solutions"))
                deltas.push_back(plucker_from_json<double>(s.at("delta")));

            if (*positivity) {
                json results = json::array();
                bool all_tnn = true;
                for (size_t i = 0; i < deltas.size(); ++i) {
                    auto tnn = positivity_check(deltas[i], PositivityMode::tnn, tol_pos);
                    auto tp = positivity_check(deltas[i], PositivityMode::tp_in_cell, tol_pos);
                    all_tnn = all_tnn && tnn.ok;
                    json r{{"solution", i}, {"tnn", tnn.ok}, {"tp_in_cell", tp.ok}};
                    if (tnn.witness) r["tnn_witness"] = partition_to_json(*tnn.witness);
                    if (tp.witness) r["tp_witness"] = partition_to_json(*tp.witness);
                    results.push_back(std::move(r));
                }
                json doc{{"command", "positivity"},
                         {"nu", partition_to_json(nu)},
                         {"tol", tol_pos},
                         {"results", std::move(results)}};
                emit(doc, out_path);
                return all_tnn ? 0 : 1;
            }

            Rat t = rat_from_string(t_s);
            auto collides = [&](const Rat& v) {
                for (const auto& q : zq)
                    if (q == v) return true;
                return false;
            };
            while (collides(t)) t -= 1;
            int d = d_arg > 0 ? d_arg : std::max(nu.length(), 1);
            int m = d + nu.part(1);
            std::vector<double> zf;
            for (const auto& q : zq) zf.push_back(to_double(q));
            json results = json::array();
            for (const auto& delta : deltas) {
                auto ech = echelon_basis(delta, d);
                auto evals = single_row_eval_polys(delta, m - d);
                auto hb = h_basis(evals, d, m, to_double(t), zf);
                json je = json::array(), jh = json::array();
                for (const auto& v : ech) je.push_back(polyvector_to_json(v));
                for (const auto& v : hb) jh.push_back(polyvector_to_json(v));
                results.push_back(json{{"echelon", std::move(je)}, {"h_basis", std::move(jh)}});
            }
            json doc{{"command", "basis"},
                     {"nu", partition_to_json(nu)},
                     {"d", d},
                     {"t", scalar_to_string(t)},
                     {"results", std::move(results)}};
            emit(doc, out_path);
            return 0;
        }

        if (*relations) {
            auto dm = parse_ints(gr_s);
            if (dm.size() != 2) throw std::invalid_argument("--gr expects d,m");
            RelationFamily fam = RelationFamily::all;
            if (which == "plucker-single-column")
                fam = RelationFamily::single_column;
            else if (which == "plucker-single-row")
                fam = RelationFamily::single_row;
            else if (which != "plucker-all")
                throw std::invalid_argument("unknown --which value: " + which);
            auto rels = plucker_relations(dm[0], dm[1], fam);
            json doc{{"command", "relations"},
                     {"d", dm[0]},
                     {"m", dm[1]},
                     {"family", which},
                     {"count", rels.size()}};
            if (list_relations) {
                json listing = json::array();
                for (const auto& r : rels) {
                    json terms = json::array();
                    for (const auto& t : r.terms)
                        terms.push_back(json{{"c", t.coeff},
                                             {"a", partition_to_json(t.a)},
                                             {"b", partition_to_json(t.b)}});
                    listing.push_back(std::move(terms));
                }
                doc["relations"] = std::move(listing);
            }
            emit(doc, out_path);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
