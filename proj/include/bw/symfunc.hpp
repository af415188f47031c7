#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bw/combinatorics.hpp"
#include "bw/poly.hpp"

namespace bw {

enum class SymBasis { schur, powersum };

/* A homogeneous symmetric function: coefficients per partition of the
 * stated degree, in the declared basis. */
struct SymFunc {
    int degree = 0;
    SymBasis basis = SymBasis::schur;
    std::map<Partition, Rat> coeffs;

    static SymFunc schur(const Partition& lam) {
        return SymFunc{lam.size(), SymBasis::schur, {{lam, Rat(1)}}};
    }
    static SymFunc powersum(const Partition& mu) {
        return SymFunc{mu.size(), SymBasis::powersum, {{mu, Rat(1)}}};
    }
    Rat coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
};

/* Change of basis through the character table:
 * s_lam = sum_mu (chi^lam_mu / z_mu) p_mu and p_mu = sum_lam chi^lam_mu s_lam. */
SymFunc convert_basis(const SymFunc& f, SymBasis target);

/* Product in the powersum basis (p_mu p_nu = p_{sort(mu cup nu)});
 * inputs are converted as needed, output is in the powersum basis. */
SymFunc sym_product(const SymFunc& f, const SymFunc& g);

/* sum of all Schur functions of degree k, in the powersum basis */
SymFunc schur_sum(int k);

/* Algebra map with p_1 -> u and p_k -> 0 for k >= 2; on Schur functions,
 * ex(s_lam) = (f^lam/|lam|!) u^{|lam|}. */
Poly<Rat> exp_specialization(const SymFunc& f);

/* Hall inner product of two functions of equal degree. */
Rat hall_inner(const SymFunc& f, const SymFunc& g);

/* <s_nu, s_{mu_1} ... s_{mu_s}> via the character sums. */
long long schur_product_multiplicity(const Partition& nu, const std::vector<Partition>& mus);

/* <s_nu, S_{k_1} ... S_{k_s}> with S_k the sum of all degree-k Schur
 * functions; without nu, the total over all nu of size sum(kappa). */
long long bethe_dimension(const std::optional<Partition>& nu, const std::vector<int>& kappa);

}  // namespace bw
