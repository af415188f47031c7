#include "bw/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace bw {

SymFunc convert_basis(const SymFunc& f, SymBasis target) {
    if (f.basis == target) return f;
    SymFunc out;
    out.degree = f.degree;
    out.basis = target;
    auto klasses = partitions_of(f.degree);
    if (target == SymBasis::powersum) {
        for (const auto& [lam, c] : f.coeffs) {
            for (const auto& mu : klasses) {
                Rat term = c * rat(static_cast<long>(character(lam, mu))) / class_centralizer_order(mu);
                if (term != 0) out.coeffs[mu] += term;
            }
        }
    } else {
        for (const auto& [mu, c] : f.coeffs) {
            for (const auto& lam : klasses) {
                Rat term = c * rat(static_cast<long>(character(lam, mu)));
                if (term != 0) out.coeffs[lam] += term;
            }
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
    return out;
}

SymFunc sym_product(const SymFunc& f, const SymFunc& g) {
    SymFunc a = convert_basis(f, SymBasis::powersum);
    SymFunc b = convert_basis(g, SymBasis::powersum);
    SymFunc out;
    out.degree = a.degree + b.degree;
    out.basis = SymBasis::powersum;
    for (const auto& [mu, cm] : a.coeffs) {
        for (const auto& [rho, cr] : b.coeffs) {
            std::vector<int> parts = mu.parts();
            parts.insert(parts.end(), rho.parts().begin(), rho.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            out.coeffs[Partition(std::move(parts))] += cm * cr;
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
        it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
    return out;
}

SymFunc schur_sum(int k) {
    SymFunc out;
    out.degree = k;
    out.basis = SymBasis::powersum;
    for (const auto& rho : partitions_of(k)) {
        Rat a(0);
        for (const auto& lam : partitions_of(k)) a += rat(static_cast<long>(character(lam, rho)));
        a /= class_centralizer_order(rho);
        if (a != 0) out.coeffs[rho] = a;
    }
    return out;
}

Poly<Rat> exp_specialization(const SymFunc& f) {
    SymFunc p = convert_basis(f, SymBasis::powersum);
    std::vector<int> ones(p.degree, 1);
    Rat c = p.coeff(Partition(std::move(ones)));
    Poly<Rat> out;
    if (c != 0) out.set_coeff(p.degree, c);
    return out;
}

Rat hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree != g.degree) throw std::invalid_argument("hall_inner: degree mismatch");
    SymFunc a = convert_basis(f, SymBasis::powersum);
    SymFunc b = convert_basis(g, SymBasis::powersum);
    Rat acc(0);
    for (const auto& [mu, cm] : a.coeffs) acc += cm * b.coeff(mu) * class_centralizer_order(mu);
    return acc;
}

long long schur_product_multiplicity(const Partition& nu, const std::vector<Partition>& mus) {
    SymFunc prod;
    prod.degree = 0;
    prod.basis = SymBasis::powersum;
    prod.coeffs[Partition{}] = Rat(1);
    for (const auto& mu : mus) prod = sym_product(prod, SymFunc::schur(mu));
    if (prod.degree != nu.size())
        throw std::invalid_argument("schur_product_multiplicity: degree mismatch");
    Rat v = hall_inner(prod, SymFunc::schur(nu));
    if (v.get_den() != 1 || v < 0)
        throw std::logic_error("schur_product_multiplicity: non-integral inner product");
    return mpz_class(v.get_num()).get_si();
}

long long bethe_dimension(const std::optional<Partition>& nu, const std::vector<int>& kappa) {
    int total = 0;
    for (int k : kappa) {
        if (k <= 0) throw std::invalid_argument("bethe_dimension: kappa parts must be positive");
        total += k;
    }
    if (nu && nu->size() != total)
        throw std::invalid_argument("bethe_dimension: |nu| != sum(kappa)");
    SymFunc prod;
    prod.degree = 0;
    prod.basis = SymBasis::powersum;
    prod.coeffs[Partition{}] = Rat(1);
    for (int k : kappa) prod = sym_product(prod, schur_sum(k));
    long long out = 0;
    auto add_for = [&](const Partition& v) {
        Rat x = hall_inner(prod, SymFunc::schur(v));
        if (x.get_den() != 1 || x < 0)
            throw std::logic_error("bethe_dimension: non-integral inner product");
        out += mpz_class(x.get_num()).get_si();
    };
    if (nu)
        add_for(*nu);
    else
        for (const auto& v : partitions_of(total)) add_for(v);
    return out;
}

}  // namespace bw
