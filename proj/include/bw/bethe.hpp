#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bw/grassmann.hpp"
#include "bw/relations.hpp"
#include "bw/specht.hpp"

namespace bw {

template <class T>
struct ZParams {
    std::vector<T> values;
    int n() const { return static_cast<int>(values.size()); }
};

/* Polynomial family of matrices sum_l coeffs[l] t^{n-|lam|-l} acting on
 * the module indexed by nu.  Empty coeffs encode the zero operator
 * (|lam| > n, or lam not contained in nu). */
template <class T>
struct BetheOperator {
    Partition nu, lam;
    int n = 0;
    size_t dim = 0;
    std::vector<Matrix<T>> coeffs;

    bool is_zero_operator() const { return coeffs.empty(); }

    Matrix<T> eval(const T& t) const {
        if (coeffs.empty()) return Matrix<T>(dim, dim);
        Matrix<T> m = coeffs.front();
        for (size_t l = 1; l < coeffs.size(); ++l) {
            Matrix<T> next = m * t;
            next += coeffs[l];
            m = std::move(next);
        }
        return m;
    }

    /* value at t = 0: the last stored coefficient */
    const Matrix<T>& tail() const { return coeffs.back(); }
};

/* Assembles the operator family on one module for one parameter vector.
 * Construction is cycle-type-first: one sweep over the supported
 * permutations of size k yields every eps^mu_l with |mu| = k, and each
 * beta^lam is then a character-weighted sum of cached eps blocks. */
template <class T>
class BetheBuilder {
  public:
    BetheBuilder(const SpechtRep<T>& rep, ZParams<T> z) : rep_(rep), z_(std::move(z)) {
        if (z_.n() != rep_.n()) throw std::invalid_argument("BetheBuilder: |z| != n");
        full_esym_.assign(1, T(1));
        for (const auto& zi : z_.values) {
            full_esym_.push_back(scalar_traits<T>::zero());
            for (size_t j = full_esym_.size() - 1; j >= 1; --j)
                full_esym_[j] += zi * full_esym_[j - 1];
        }
    }

    const SpechtRep<T>& rep() const { return rep_; }
    const ZParams<T>& z() const { return z_; }
    int n() const { return rep_.n(); }

    /* eps^mu_l: sum over supported permutations of cycle type mu times
     * the elementary symmetric polynomial e_l of the complementary z's. */
    const Matrix<T>& epsilon(const Partition& mu, int ell) {
        int k = mu.size();
        if (k + ell > n()) throw std::invalid_argument("epsilon: |mu| + ell > n");
        ensure_block(k);
        return eps_.at(mu).at(ell);
    }

    const BetheOperator<T>& beta(const Partition& lam) {
        auto it = beta_.find(lam);
        if (it != beta_.end()) return it->second;
        BetheOperator<T> op;
        op.nu = rep_.nu();
        op.lam = lam;
        op.n = n();
        op.dim = rep_.dim();
        int k = lam.size();
        bool zero = k > n();
        if constexpr (!scalar_traits<T>::exact) {
            /* vanishing off the cell is exact cancellation; do not rely on
             * it in floating point */
            if (!rep_.nu().contains(lam)) zero = true;
        }
        if (!zero) {
            ensure_block(k);
            std::vector<std::pair<long long, const std::vector<Matrix<T>>*>> parts;
            for (const auto& mu : partitions_of(k)) {
                long long chi = character(lam, mu);
                if (chi != 0) parts.emplace_back(chi, &eps_.at(mu));
            }
            bool all_zero = true;
            for (int ell = 0; ell <= n() - k; ++ell) {
                Matrix<T> m(rep_.dim(), rep_.dim());
                for (auto& [chi, block] : parts)
                    m.add_scaled((*block)[ell], T(static_cast<int>(chi)));
                if (!m.is_zero()) all_zero = false;
                op.coeffs.push_back(std::move(m));
            }
            if (all_zero) op.coeffs.clear();
        }
        return beta_.emplace(lam, std::move(op)).first->second;
    }

    Matrix<T> beta_at(const Partition& lam, const T& t) { return beta(lam).eval(t); }

    /* beta^{1^k}(t) for k = 0..n: the coefficients of the fundamental
     * differential operator sum_k (-1)^k beta^{1^k}(u) d_u^{n-k}. */
    std::vector<BetheOperator<T>> fundamental() {
        std::vector<BetheOperator<T>> out;
        for (int k = 0; k <= n(); ++k) {
            std::vector<int> col(k, 1);
            out.push_back(beta(Partition(std::move(col))));
        }
        return out;
    }

  private:
    void ensure_block(int k) {
        if (built_.count(k)) return;
        size_t dim = rep_.dim();
        std::map<Partition, std::vector<Matrix<T>>> block;
        for (const auto& mu : partitions_of(k))
            block.emplace(mu, std::vector<Matrix<T>>(n() - k + 1, Matrix<T>(dim, dim)));

        std::vector<int> X(k);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                /* e_l over the complement of X, by one-variable removals */
                std::vector<T> e = full_esym_;
                for (int v : X) remove_variable(e, z_.values[v - 1]);
                /* group S_X by cycle type */
                std::map<Partition, Matrix<T>> bucket;
                std::vector<int> img(X.begin(), X.end());
                do {
                    std::vector<int> full(n());
                    for (int v = 1; v <= n(); ++v) full[v - 1] = v;
                    for (int i = 0; i < k; ++i) full[X[i] - 1] = img[i];
                    Permutation sigma{std::move(full)};
                    Partition cyc = cycle_type_on(sigma, X);
                    auto it = bucket.try_emplace(cyc, Matrix<T>(dim, dim)).first;
                    it->second += rep_.matrix(sigma);
                } while (std::next_permutation(img.begin(), img.end()));
                for (auto& [mu, m] : bucket) {
                    auto& dst = block.at(mu);
                    for (int ell = 0; ell <= n() - k; ++ell) {
                        if (e[ell] == scalar_traits<T>::zero()) continue;
                        dst[ell].add_scaled(m, e[ell]);
                    }
                }
                return;
            }
            for (int v = start; v <= n() - (k - depth - 1); ++v) {
                X[depth] = v;
                rec(v + 1, depth + 1);
            }
        };
        rec(1, 0);
        for (auto& [mu, mats] : block) eps_.emplace(mu, std::move(mats));
        built_.insert(k);
    }

    static void remove_variable(std::vector<T>& e, const T& v) {
        std::vector<T> out(e.size() - 1);
        out[0] = T(1);
        for (size_t j = 1; j < out.size(); ++j) out[j] = e[j] - v * out[j - 1];
        e = std::move(out);
    }

    const SpechtRep<T>& rep_;
    ZParams<T> z_;
    std::vector<T> full_esym_;
    std::set<int> built_;
    std::map<Partition, std::vector<Matrix<T>>> eps_;
    std::map<Partition, BetheOperator<T>> beta_;
};

template <class T>
Matrix<T> epsilon_matrix(const SpechtRep<T>& rep, const Partition& mu, int ell,
                         const ZParams<T>& z) {
    BetheBuilder<T> b(rep, z);
    return b.epsilon(mu, ell);
}

template <class T>
BetheOperator<T> beta_operator(const SpechtRep<T>& rep, const Partition& lam,
                               const ZParams<T>& z) {
    BetheBuilder<T> b(rep, z);
    return b.beta(lam);
}

template <class T>
Matrix<T> eval_beta(const BetheOperator<T>& op, const T& t) {
    return op.eval(t);
}

template <class T>
std::vector<BetheOperator<T>> fundamental_operator_coeffs(const SpechtRep<T>& rep,
                                                          const ZParams<T>& z) {
    BetheBuilder<T> b(rep, z);
    return b.fundamental();
}

enum class IdentityFamily { commutativity, translation, plucker_single_column, plucker_all };

struct IdentityViolation {
    std::string kind;
    Partition lam, mu;
    long relation_index = -1;
    std::string detail;
};

struct IdentityReport {
    IdentityFamily which{};
    long long checked = 0;
    std::vector<IdentityViolation> violations;
    bool passed() const { return violations.empty(); }
};

/* all partitions of size <= n */
inline std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(std::move(p));
    return out;
}

/* Checks a relation list on the operator family at one point; shared by
 * the full and the sampled verification drivers. */
inline void check_relations_on_operators(BetheBuilder<Rat>& b,
                                         const std::vector<PluckerRelation>& relations,
                                         const Rat& t, IdentityReport& report) {
    int n = b.n();
    std::map<Partition, Matrix<Rat>> evals;
    auto ev = [&](const Partition& p) -> const Matrix<Rat>& {
        auto it = evals.find(p);
        if (it == evals.end()) it = evals.emplace(p, b.beta_at(p, t)).first;
        return it->second;
    };
    std::map<std::pair<Partition, Partition>, Matrix<Rat>> prod;
    for (size_t r = 0; r < relations.size(); ++r) {
        Matrix<Rat> acc(b.rep().dim(), b.rep().dim());
        for (const auto& term : relations[r].terms) {
            if (term.a.size() > n || term.b.size() > n) continue;  // zero operator
            auto key = std::make_pair(term.a, term.b);
            auto it = prod.find(key);
            if (it == prod.end()) it = prod.emplace(key, ev(term.a) * ev(term.b)).first;
            acc.add_scaled(it->second, Rat(term.coeff));
        }
        ++report.checked;
        if (!acc.is_zero())
            report.violations.push_back(
                IdentityViolation{"plucker", {}, {}, static_cast<long>(r), "nonzero residual"});
    }
}

/* Exact verification of the operator identities on one module.  Requires
 * the exact form; each trial point is a pair (s,t). */
inline IdentityReport verify_identities(const SeminormalRep& rep, const ZParams<Rat>& z,
                                        IdentityFamily which,
                                        const std::vector<std::pair<Rat, Rat>>& trial_points) {
    BetheBuilder<Rat> b(rep, z);
    IdentityReport report;
    report.which = which;
    int n = rep.n();
    auto lams = partitions_up_to(n);

    if (which == IdentityFamily::commutativity) {
        for (const auto& [s, t] : trial_points) {
            std::vector<Matrix<Rat>> at_s, at_t;
            for (const auto& p : lams) {
                at_s.push_back(b.beta_at(p, s));
                at_t.push_back(b.beta_at(p, t));
            }
            for (size_t i = 0; i < lams.size(); ++i) {
                for (size_t j = i; j < lams.size(); ++j) {
                    ++report.checked;
                    if (!(at_s[i] * at_t[j] == at_t[j] * at_s[i]))
                        report.violations.push_back(IdentityViolation{
                            "commutativity", lams[i], lams[j], -1, "operators do not commute"});
                }
            }
        }
        return report;
    }

    if (which == IdentityFamily::translation) {
        for (const auto& [s, t] : trial_points) {
            for (const auto& mu : lams) {
                Matrix<Rat> lhs = b.beta_at(mu, s + t);
                Matrix<Rat> rhs(rep.dim(), rep.dim());
                for (const auto& lam : lams) {
                    if (!lam.contains(mu)) continue;
                    Rat c = syt_ratio(lam, mu) * rat_pow(t, lam.size() - mu.size());
                    if (c == 0) continue;
                    rhs.add_scaled(b.beta_at(lam, s), c);
                }
                ++report.checked;
                if (!(lhs == rhs))
                    report.violations.push_back(IdentityViolation{
                        "translation", mu, {}, -1, "translation expansion mismatch"});
            }
        }
        return report;
    }

    auto family = which == IdentityFamily::plucker_single_column ? RelationFamily::single_column
                                                                 : RelationFamily::all;
    auto relations = plucker_relations(n, 2 * n, family);
    for (const auto& [s, t] : trial_points) {
        (void)t;
        check_relations_on_operators(b, relations, s, report);
    }
    return report;
}

}  // namespace bw
