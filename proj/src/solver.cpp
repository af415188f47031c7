#include "bw/solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace bw {

namespace {

const std::vector<PluckerRelation>& cached_relations(int n, RelationFamily fam) {
    static std::map<std::pair<int, int>, std::vector<PluckerRelation>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(n, static_cast<int>(fam));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, plucker_relations(n, 2 * n, fam)).first;
    return it->second;
}

std::vector<Partition> cell_partitions(const Partition& nu) {
    std::vector<Partition> out;
    for (int k = 0; k <= nu.size(); ++k)
        for (auto& p : partitions_of(k, std::nullopt, nu)) out.push_back(std::move(p));
    return out;
}

/* consecutive ranges of the sorted eigenvalue list separated by gaps
 * above tol * max(1, spectral diameter) */
std::vector<std::pair<int, int>> cluster_ranges(const std::vector<double>& ev, double tol) {
    int n = static_cast<int>(ev.size());
    std::vector<std::pair<int, int>> out;
    if (n == 0) return out;
    double diam = ev.back() - ev.front();
    double thresh = tol * std::max(1.0, std::abs(diam));
    int start = 0;
    for (int i = 1; i < n; ++i) {
        if (ev[i] - ev[i - 1] > thresh) {
            out.emplace_back(start, i);
            start = i;
        }
    }
    out.emplace_back(start, n);
    return out;
}

}  // namespace

std::vector<Solution> solve_inverse_wronski(const Partition& nu, const std::vector<double>& z,
                                            const SolveConfig& cfg) {
    int n = nu.size();
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("solve_inverse_wronski: |z| != |nu|");
    auto rep = build_rep<double>(nu);
    size_t dim = rep.dim();
    ZParams<double> zp{z};
    BetheBuilder<double> builder(rep, zp);

    /* generating family: every coefficient of every column-shape operator */
    std::vector<const Matrix<double>*> gens;
    for (int k = 0; k <= n; ++k) {
        const auto& op = builder.beta(Partition(std::vector<int>(k, 1)));
        for (const auto& c : op.coeffs) gens.push_back(&c);
    }

    auto sub = cell_partitions(nu);
    std::vector<Matrix<double>> beta0;
    std::vector<double> beta0_scale;
    beta0.reserve(sub.size());
    for (const auto& lam : sub) {
        beta0.push_back(builder.beta_at(lam, 0.0));
        beta0_scale.push_back(1.0 + beta0.back().max_abs());
    }

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double worst_gap = 0;
    double scalar_tol = std::max(10 * cfg.cluster_tol, 1e-9);

    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        Matrix<double> acc(dim, dim);
        for (const auto* g : gens) acc.add_scaled(*g, U(rng));
        Eigen::MatrixXd A(dim, dim);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) A(i, j) = 0.5 * (acc(i, j) + acc(j, i));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
        if (es.info() != Eigen::Success) continue;
        std::vector<double> ev(dim);
        for (size_t i = 0; i < dim; ++i) ev[i] = es.eigenvalues()(i);
        auto ranges = cluster_ranges(ev, cfg.cluster_tol);

        /* every operator must act as a scalar on every cluster */
        bool ok = true;
        for (auto [a, b] : ranges) {
            int c = b - a;
            for (size_t t = 0; t < beta0.size() && ok; ++t) {
                const auto& B = beta0[t];
                /* M = P^T B P for the cluster columns */
                for (int p = 0; p < c && ok; ++p) {
                    for (int q = 0; q < c && ok; ++q) {
                        double acc2 = 0;
                        for (size_t r = 0; r < dim; ++r) {
                            double Bv = 0;
                            for (size_t s = 0; s < dim; ++s)
                                Bv += B(r, s) * es.eigenvectors()(s, a + q);
                            acc2 += es.eigenvectors()(r, a + p) * Bv;
                        }
                        if (p == q) continue;
                        if (std::abs(acc2) > scalar_tol * beta0_scale[t]) {
                            ok = false;
                            worst_gap = (b < static_cast<int>(dim) ? ev[b] - ev[b - 1] : 0.0);
                        }
                    }
                }
            }
            if (!ok) break;
        }
        /* diagonal spread check per cluster */
        if (ok) {
            for (auto [a, b] : ranges) {
                for (size_t t = 0; t < beta0.size() && ok; ++t) {
                    const auto& B = beta0[t];
                    double first = 0, lo = 0, hi = 0;
                    for (int p = 0; p < b - a; ++p) {
                        double ray = 0;
                        for (size_t r = 0; r < dim; ++r) {
                            double Bv = 0;
                            for (size_t s = 0; s < dim; ++s)
                                Bv += B(r, s) * es.eigenvectors()(s, a + p);
                            ray += es.eigenvectors()(r, a + p) * Bv;
                        }
                        if (p == 0) {
                            first = lo = hi = ray;
                        } else {
                            lo = std::min(lo, ray);
                            hi = std::max(hi, ray);
                        }
                    }
                    (void)first;
                    if (hi - lo > scalar_tol * beta0_scale[t]) ok = false;
                }
                if (!ok) break;
            }
        }
        if (!ok) continue;

        /* extract */
        Rat target_rat = cell_normalization(nu);
        double target = target_rat.get_d();
        std::vector<Solution> out;
        for (auto [a, b] : ranges) {
            Solution sol;
            sol.multiplicity = b - a;
            for (int p = 0; p < b - a; ++p) {
                std::vector<double> v(dim);
                for (size_t r = 0; r < dim; ++r) v[r] = es.eigenvectors()(r, a + p);
                sol.eigenvectors.push_back(std::move(v));
            }
            const auto& v0 = sol.eigenvectors.front();
            std::vector<double> theta(sub.size());
            double eig_res = 0;
            for (size_t t = 0; t < sub.size(); ++t) {
                const auto& B = beta0[t];
                double ray = 0, worst = 0;
                std::vector<double> Bv(dim, 0.0);
                for (size_t r = 0; r < dim; ++r)
                    for (size_t s = 0; s < dim; ++s) Bv[r] += B(r, s) * v0[s];
                for (size_t r = 0; r < dim; ++r) ray += v0[r] * Bv[r];
                for (size_t r = 0; r < dim; ++r)
                    worst = std::max(worst, std::abs(Bv[r] - ray * v0[r]));
                theta[t] = ray;
                eig_res = std::max(eig_res, worst / beta0_scale[t]);
            }
            /* exact renormalization of the top coordinate */
            double pre = 0;
            for (size_t t = 0; t < sub.size(); ++t)
                if (sub[t] == nu) pre = theta[t];
            if (std::abs(pre - target) > 1e-6 * (1.0 + std::abs(target)))
                throw SolveError("top coordinate far from its exact value: got " +
                                 std::to_string(pre) + ", expected " + std::to_string(target));
            double factor = target / pre;
            sol.delta.nu = nu;
            for (size_t t = 0; t < sub.size(); ++t) sol.delta.entries[sub[t]] = theta[t] * factor;
            sol.residuals.eigen = eig_res;
            auto check = verify_solution(sol, nu, z, cfg.residual_tol);
            sol.residuals.wronskian = check.residuals.wronskian;
            sol.residuals.relations = check.residuals.relations;
            out.push_back(std::move(sol));
        }
        return out;
    }
    std::ostringstream msg;
    msg << "cluster validation failed after " << (cfg.max_retries + 1)
        << " attempts (problematic spectral gap " << worst_gap << " at cluster_tol "
        << cfg.cluster_tol << ")";
    throw SolveError(msg.str());
}

SolutionCheck verify_solution(const Solution& sol, const Partition& nu,
                              const std::vector<double>& z, double tol, bool full_relations) {
    int n = nu.size();
    SolutionCheck out;
    out.residuals = sol.residuals;

    Poly<double> w = wronskian_from_pluckers(sol.delta);
    Poly<double> g = poly_from_roots_negated(z);
    double wres = 0;
    for (int k = 0; k <= std::max(w.degree(), g.degree()); ++k)
        wres = std::max(wres, std::abs(w.coeff(k) - g.coeff(k)));
    out.residuals.wronskian = wres;

    double rel = to_double(eval_relations(sol.delta, cached_relations(n, RelationFamily::single_column)));
    rel = std::max(rel, to_double(eval_relations(sol.delta, cached_relations(n, RelationFamily::single_row))));
    if (full_relations)
        rel = std::max(rel, to_double(eval_relations(sol.delta, cached_relations(n, RelationFamily::all))));
    out.residuals.relations = rel;

    out.pass = wres <= tol && rel <= tol;
    return out;
}

std::vector<RepeatedRootClass> count_solutions_repeated(const Partition& nu,
                                                        const std::vector<int>& kappa,
                                                        const std::vector<double>& z_distinct,
                                                        const SolveConfig& cfg) {
    if (kappa.size() != z_distinct.size())
        throw std::invalid_argument("count_solutions_repeated: |kappa| != |z_distinct|");
    int n = 0;
    for (int k : kappa) n += k;
    if (n != nu.size()) throw std::invalid_argument("count_solutions_repeated: sum kappa != |nu|");

    std::vector<double> z;
    for (size_t i = 0; i < kappa.size(); ++i)
        for (int r = 0; r < kappa[i]; ++r) z.push_back(z_distinct[i]);
    auto sols = solve_inverse_wronski(nu, z, cfg);

    /* all mu-tuples with mu_i a partition of kappa_i */
    std::vector<std::vector<Partition>> tuples{{}};
    for (int k : kappa) {
        std::vector<std::vector<Partition>> next;
        for (const auto& t : tuples)
            for (const auto& mu : partitions_of(k)) {
                auto u = t;
                u.push_back(mu);
                next.push_back(std::move(u));
            }
        tuples = std::move(next);
    }

    auto rep = build_rep<double>(nu);
    std::vector<Matrix<double>> projections;
    projections.reserve(tuples.size());
    for (const auto& t : tuples) projections.push_back(schubert_projection(rep, t, z_distinct));

    std::vector<RepeatedRootClass> classes(tuples.size());
    for (size_t i = 0; i < tuples.size(); ++i) classes[i].mu_tuple = tuples[i];

    for (const auto& sol : sols) {
        const auto& v = sol.eigenvectors.front();
        int found = -1;
        for (size_t i = 0; i < tuples.size(); ++i) {
            const auto& P = projections[i];
            double res = 0;
            for (size_t r = 0; r < v.size(); ++r) {
                double pv = 0;
                for (size_t s = 0; s < v.size(); ++s) pv += P(r, s) * v[s];
                res = std::max(res, std::abs(pv - v[r]));
            }
            if (res <= 1e-6) {
                if (found >= 0) throw SolveError("eigencluster fixed by two projections");
                found = static_cast<int>(i);
            }
        }
        if (found < 0) throw SolveError("eigencluster not fixed by any projection");
        auto& cls = classes[found];
        cls.count += 1;
        cls.total_multiplicity += sol.multiplicity;
        long long dimM = 1;
        for (const auto& mu : tuples[found]) dimM *= static_cast<long long>(num_syt(mu));
        if (sol.multiplicity % dimM != 0)
            throw SolveError("cluster dimension not divisible by dim of the multiplicity space");
        cls.schubert_multiplicities.push_back(static_cast<int>(sol.multiplicity / dimM));
    }
    return classes;
}

std::vector<ComplexSolution> solve_inverse_wronski_complex(
    const Partition& nu, const std::vector<std::complex<double>>& z, const SolveConfig& cfg) {
    using C = std::complex<double>;
    int n = nu.size();
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("solve_inverse_wronski_complex: |z| != |nu|");
    auto rep = build_rep<C>(nu);
    size_t dim = rep.dim();
    BetheBuilder<C> builder(rep, ZParams<C>{z});

    std::vector<const Matrix<C>*> gens;
    for (int k = 0; k <= n; ++k) {
        const auto& op = builder.beta(Partition(std::vector<int>(k, 1)));
        for (const auto& c : op.coeffs) gens.push_back(&c);
    }
    auto sub = cell_partitions(nu);
    std::vector<Matrix<C>> beta0;
    for (const auto& lam : sub) beta0.push_back(builder.beta_at(lam, C(0)));

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const double tol = 1e-6;

    for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
        Matrix<C> acc(dim, dim);
        for (const auto* g : gens) acc.add_scaled(*g, C(U(rng)));
        Eigen::MatrixXcd A(dim, dim);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) A(i, j) = acc(i, j);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
        if (es.info() != Eigen::Success) continue;

        /* sort eigenvalues deterministically, then group by distance */
        std::vector<int> order(dim);
        for (size_t i = 0; i < dim; ++i) order[i] = static_cast<int>(i);
        auto evs = es.eigenvalues();
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (evs(a).real() != evs(b).real()) return evs(a).real() < evs(b).real();
            return evs(a).imag() < evs(b).imag();
        });
        double diam = 0;
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = i + 1; j < dim; ++j)
                diam = std::max(diam, std::abs(evs(order[i]) - evs(order[j])));
        double thresh = cfg.cluster_tol * std::max(1.0, diam);
        std::vector<int> comp(dim, -1);
        int ncomp = 0;
        for (size_t i = 0; i < dim; ++i) {
            if (comp[order[i]] >= 0) continue;
            comp[order[i]] = ncomp;
            /* breadth-first over the proximity graph */
            std::vector<int> stack{order[i]};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (size_t j = 0; j < dim; ++j) {
                    int w = order[j];
                    if (comp[w] < 0 && std::abs(evs(u) - evs(w)) <= thresh) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<std::vector<int>> clusters(ncomp);
        for (size_t i = 0; i < dim; ++i) clusters[comp[order[i]]].push_back(order[i]);

        bool ok = true;
        Rat target_rat = cell_normalization(nu);
        double target = target_rat.get_d();
        std::vector<ComplexSolution> out;
        for (const auto& cl : clusters) {
            ComplexSolution sol;
            sol.multiplicity = static_cast<int>(cl.size());
            for (int idx : cl) {
                std::vector<C> v(dim);
                for (size_t r = 0; r < dim; ++r) v[r] = es.eigenvectors()(r, idx);
                sol.eigenvectors.push_back(std::move(v));
            }
            const auto& v0 = sol.eigenvectors.front();
            double vn = 0;
            for (const auto& x : v0) vn += std::norm(x);
            std::vector<C> theta(sub.size());
            double eig_res = 0;
            for (size_t t = 0; t < sub.size(); ++t) {
                const auto& B = beta0[t];
                std::vector<C> Bv(dim, C(0));
                for (size_t r = 0; r < dim; ++r)
                    for (size_t s = 0; s < dim; ++s) Bv[r] += B(r, s) * v0[s];
                C ray(0);
                for (size_t r = 0; r < dim; ++r) ray += std::conj(v0[r]) * Bv[r];
                ray /= vn;
                double worst = 0;
                for (size_t r = 0; r < dim; ++r)
                    worst = std::max(worst, std::abs(Bv[r] - ray * v0[r]));
                theta[t] = ray;
                eig_res = std::max(eig_res, worst / (1.0 + B.max_abs()));
            }
            if (sol.multiplicity == 1 && eig_res > tol) {
                ok = false;
                break;
            }
            C pre(0);
            for (size_t t = 0; t < sub.size(); ++t)
                if (sub[t] == nu) pre = theta[t];
            if (std::abs(pre - C(target)) > 1e-6 * (1.0 + std::abs(target))) {
                ok = false;
                break;
            }
            C factor = C(target) / pre;
            sol.delta.nu = nu;
            for (size_t t = 0; t < sub.size(); ++t) sol.delta.entries[sub[t]] = theta[t] * factor;
            sol.residuals.eigen = eig_res;
            out.push_back(std::move(sol));
        }
        if (ok) return out;
    }
    throw SolveError("complex solve: validation failed after retries");
}

Poly<double> apply_fundamental_operator(const std::vector<Poly<double>>& column_evals,
                                        const Poly<double>& f) {
    int n = static_cast<int>(column_evals.size()) - 1;
    std::vector<Poly<double>> derivs(n + 1);
    derivs[0] = f;
    for (int j = 1; j <= n; ++j) derivs[j] = derivs[j - 1].derivative();
    Poly<double> acc;
    for (int k = 0; k <= n; ++k) {
        Poly<double> term = column_evals[k] * derivs[n - k];
        if (k % 2) term *= -1.0;
        acc += term;
    }
    return acc;
}

}  // namespace bw
