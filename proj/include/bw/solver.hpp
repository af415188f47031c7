#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bw/bethe.hpp"
#include "bw/grassmann.hpp"

namespace bw {

struct SolveConfig {
    /* operators are assembled exactly where possible; eigensolving is
     * always floating point */
    std::uint64_t seed = 0;
    double cluster_tol = 1e-7;   // relative to the spectral diameter
    double residual_tol = 1e-8;  // wronskian / relation acceptance
    int max_retries = 8;
};

struct SolveResiduals {
    double wronskian = 0, relations = 0, eigen = 0;
};

/* One point of the fibre: coordinates, generalized-eigenspace dimension,
 * an orthonormal basis of the cluster, and the residual diagnostics. */
template <class T>
struct SolutionT {
    PluckerVector<T> delta;
    int multiplicity = 1;
    std::vector<std::vector<T>> eigenvectors;
    SolveResiduals residuals;
};
using Solution = SolutionT<double>;
using ComplexSolution = SolutionT<std::complex<double>>;

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Simultaneous diagonalization of the operator family on the module
 * indexed by nu; real z.  Returns one Solution per joint eigenspace,
 * ordered by the eigenvalue of the seeded generic combination; the
 * multiplicities always sum to f^nu. */
std::vector<Solution> solve_inverse_wronski(const Partition& nu, const std::vector<double>& z,
                                            const SolveConfig& cfg = {});

/* Best-effort complex variant (non-Hermitian eigenproblem, looser
 * tolerances, generalized eigenspaces detected by rank decay). */
std::vector<ComplexSolution> solve_inverse_wronski_complex(
    const Partition& nu, const std::vector<std::complex<double>>& z, const SolveConfig& cfg = {});

struct SolutionCheck {
    SolveResiduals residuals;
    bool pass = false;
};

/* Recomputes the Wronskian residual against prod (u + z_i) and the
 * relation residual over the single-column and single-row families of
 * Gr(n,2n) (full family optional); pass iff both are within tol. */
SolutionCheck verify_solution(const Solution& sol, const Partition& nu,
                              const std::vector<double>& z, double tol,
                              bool full_relations = false);

/* Product beta^{mu_1}(-z_1) ... beta^{mu_s}(-z_s) on the module, built
 * with the parameter vector repeating z_i exactly |mu_i| times, rescaled
 * by the exact constant that makes it idempotent.  Zero when some mu_i
 * is not contained in nu.  Rejects repeated z values. */
template <class T>
Matrix<T> schubert_projection(const SpechtRep<T>& rep, const std::vector<Partition>& mu_list,
                              const std::vector<T>& z_distinct) {
    if (mu_list.size() != z_distinct.size())
        throw std::invalid_argument("schubert_projection: |mu_list| != |z_distinct|");
    for (size_t i = 0; i < z_distinct.size(); ++i)
        for (size_t j = i + 1; j < z_distinct.size(); ++j)
            if (z_distinct[i] == z_distinct[j])
                throw std::invalid_argument("schubert_projection: repeated z values");
    int n = 0;
    for (const auto& mu : mu_list) n += mu.size();
    if (n != rep.n()) throw std::invalid_argument("schubert_projection: sum |mu_i| != n");

    ZParams<T> z;
    for (size_t i = 0; i < mu_list.size(); ++i)
        for (int r = 0; r < mu_list[i].size(); ++r) z.values.push_back(z_distinct[i]);
    BetheBuilder<T> b(rep, z);

    Matrix<T> p = Matrix<T>::identity(rep.dim());
    T scale(1);
    for (size_t i = 0; i < mu_list.size(); ++i) {
        p = p * b.beta_at(mu_list[i], -z_distinct[i]);
        /* beta^{mu_i}(-z_i) = c_i alpha^{mu_i}_{X_i} with
         * c_i = prod_{l != i} (z_l - z_i)^{|mu_l|}; the idempotent form
         * divides out c_i |mu_i|!/f^{mu_i}. */
        T ci(1);
        for (size_t l = 0; l < mu_list.size(); ++l) {
            if (l == i) continue;
            for (int r = 0; r < mu_list[l].size(); ++r)
                ci *= (z_distinct[l] - z_distinct[i]);
        }
        scale *= ci * scalar_traits<T>::from_rat(Rat(1) / syt_ratio(mu_list[i]));
    }
    T inv = T(1) / scale;
    p *= inv;
    return p;
}

/* Per-class outcome of a repeated-root solve. */
struct RepeatedRootClass {
    std::vector<Partition> mu_tuple;              // mu_i, a partition of kappa_i
    int count = 0;                                // distinct solutions in this class
    int total_multiplicity = 0;                   // sum of cluster dimensions
    std::vector<int> schubert_multiplicities;     // per solution, cluster dim / dim M^mu
};

/* Solves with the kappa-repeated parameter vector, classifies every
 * eigencluster by the projection that fixes it, and reports solution
 * counts per mu-tuple; multiplicities divide by dim M^mu exactly. */
std::vector<RepeatedRootClass> count_solutions_repeated(const Partition& nu,
                                                        const std::vector<int>& kappa,
                                                        const std::vector<double>& z_distinct,
                                                        const SolveConfig& cfg = {});

/* Applies sum_k (-1)^k p_k(u) f^{(n-k)}(u) with p_k the eigenvalue
 * polynomial of beta^{1^k}(.); zero on members of the solution space. */
Poly<double> apply_fundamental_operator(const std::vector<Poly<double>>& column_evals,
                                        const Poly<double>& f);

}  // namespace bw
