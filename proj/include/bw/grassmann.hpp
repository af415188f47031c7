#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bw/matrix.hpp"
#include "bw/poly.hpp"
#include "bw/relations.hpp"

namespace bw {

/* Plucker coordinates of a point of the cell indexed by nu, stored per
 * partition lam subseteq nu; coordinates of partitions not contained in
 * nu are identically zero and never stored.  The canonical normalization
 * fixes the nu-entry to |nu|!/f^nu. */
template <class T>
struct PluckerVector {
    Partition nu;
    std::map<Partition, T> entries;

    T at(const Partition& lam) const {
        auto it = entries.find(lam);
        return it == entries.end() ? scalar_traits<T>::zero() : it->second;
    }
    void set(const Partition& lam, T v) {
        if (!nu.contains(lam))
            throw std::invalid_argument("PluckerVector: index not contained in cell");
        entries[lam] = std::move(v);
    }
    double norm2() const {
        double s = 0;
        for (const auto& [k, v] : entries) {
            double a = scalar_traits<T>::abs_value(v);
            s += a * a;
        }
        return std::sqrt(s);
    }
};

/* A vector of C^m written in the basis e_j(u) = u^{j-1}/(j-1)!;
 * coeffs[j-1] is the e_j coordinate. */
template <class T>
struct PolyVector {
    std::vector<T> coeffs;

    Poly<T> to_poly() const {
        std::vector<T> mono(coeffs.size());
        for (size_t j = 0; j < coeffs.size(); ++j)
            mono[j] = coeffs[j] / scalar_traits<T>::from_rat(factorial_rat(j));
        return Poly<T>(std::move(mono));
    }
    static PolyVector from_poly(const Poly<T>& p) {
        PolyVector v;
        v.coeffs.resize(p.coeffs().size());
        for (size_t j = 0; j < v.coeffs.size(); ++j)
            v.coeffs[j] = p.coeff(j) * scalar_traits<T>::from_rat(factorial_rat(j));
        return v;
    }
};

enum class PositivityMode { tnn, tp_in_cell };

struct PositivityVerdict {
    bool ok = true;
    std::optional<Partition> witness;  // violating index, if any
};

inline Rat cell_normalization(const Partition& nu) {
    return factorial_rat(nu.size()) / Rat(static_cast<long>(num_syt(nu)));
}

/* Rescales so that entries[nu] = |nu|!/f^nu; rejects a zero nu-entry. */
template <class T>
PluckerVector<T> normalized(PluckerVector<T> delta) {
    T top = delta.at(delta.nu);
    if (top == scalar_traits<T>::zero())
        throw std::invalid_argument("normalize: vanishing top coordinate");
    T target = scalar_traits<T>::from_rat(cell_normalization(delta.nu));
    T factor = target / top;
    for (auto& [k, v] : delta.entries) v *= factor;
    return delta;
}

template <class T>
bool is_normalized(const PluckerVector<T>& delta, double tol = 1e-9) {
    T top = delta.at(delta.nu);
    T target = scalar_traits<T>::from_rat(cell_normalization(delta.nu));
    if constexpr (scalar_traits<T>::exact)
        return top == target;
    else
        return scalar_traits<T>::abs_value(top - target) <=
               tol * (1.0 + scalar_traits<T>::abs_value(target));
}

/* Max residual of the relations on the given coordinates.  Exact mode
 * returns the exact maximum absolute value; float mode scales each
 * residual by the squared coordinate norm so tolerances are scale-free. */
template <class T>
T eval_relations(const PluckerVector<T>& delta, const std::vector<PluckerRelation>& relations) {
    T worst = scalar_traits<T>::zero();
    double scale = 1.0;
    if constexpr (!scalar_traits<T>::exact) {
        double n = delta.norm2();
        scale = n > 0 ? n * n : 1.0;
    }
    for (const auto& rel : relations) {
        T v = scalar_traits<T>::zero();
        for (const auto& t : rel.terms) {
            T x = delta.at(t.a);
            if (x == scalar_traits<T>::zero()) continue;
            T y = delta.at(t.b);
            if (y == scalar_traits<T>::zero()) continue;
            v += T(t.coeff) * x * y;
        }
        if constexpr (scalar_traits<T>::exact) {
            if (abs(v) > worst) worst = abs(v);
        } else {
            double r = scalar_traits<T>::abs_value(v) / scale;
            if (r > scalar_traits<T>::abs_value(worst)) worst = T(r);
        }
    }
    return worst;
}

/* Wr = sum over lam of (f^lam/|lam|!) Delta^lam u^{|lam|}; monic of
 * degree |nu| for normalized coordinates. */
template <class T>
Poly<T> wronskian_from_pluckers(const PluckerVector<T>& delta) {
    Poly<T> w;
    for (const auto& [lam, v] : delta.entries) {
        T c = scalar_traits<T>::from_rat(syt_ratio(lam)) * v;
        Poly<T> mono;
        mono.set_coeff(lam.size(), c);
        w += mono;
    }
    return w;
}

/* Delta^mu(t) = sum over lam containing mu of
 * (f^{lam/mu}/|lam/mu|!) Delta^lam t^{|lam/mu|}. */
template <class T>
PluckerVector<T> translate_pluckers(const PluckerVector<T>& delta, const T& t) {
    PluckerVector<T> out;
    out.nu = delta.nu;
    for (int k = 0; k <= delta.nu.size(); ++k) {
        for (const auto& mu : partitions_of(k, std::nullopt, delta.nu)) {
            T acc = scalar_traits<T>::zero();
            for (const auto& [lam, v] : delta.entries) {
                if (!lam.contains(mu)) continue;
                T tp(1);
                for (int e = 0; e < lam.size() - mu.size(); ++e) tp *= t;
                acc += scalar_traits<T>::from_rat(syt_ratio(lam, mu)) * v * tp;
            }
            if (!(acc == scalar_traits<T>::zero())) out.entries[mu] = std::move(acc);
        }
    }
    return out;
}

template <class T>
PluckerVector<T> dual_pluckers(const PluckerVector<T>& delta) {
    PluckerVector<T> out;
    out.nu = delta.nu.conjugate();
    for (const auto& [lam, v] : delta.entries) out.entries[lam.conjugate()] = v;
    return out;
}

namespace detail {
/* partition of the sorted column set I under rank d */
inline Partition index_set_partition(const std::vector<int>& I) {
    int d = static_cast<int>(I.size());
    std::vector<int> parts(d);
    for (int k = 1; k <= d; ++k) parts[k - 1] = I[d - k] - (d - k + 1);
    return Partition(std::move(parts));
}
}  // namespace detail

/* Maximal minors of the coefficient matrix of a basis, renormalized to
 * the cell normalization.  Rejects rank-deficient input and spans with a
 * nonzero coordinate outside the closed cell. */
template <class T>
PluckerVector<T> pluckers_from_basis(const std::vector<PolyVector<T>>& polys, const Partition& nu,
                                     double tol = 1e-9) {
    int d = static_cast<int>(polys.size());
    if (d == 0) throw std::invalid_argument("pluckers_from_basis: empty basis");
    int m = d + nu.part(1);
    for (const auto& p : polys) m = std::max(m, static_cast<int>(p.coeffs.size()));
    Matrix<T> A(d, m);
    for (int r = 0; r < d; ++r)
        for (size_t j = 0; j < polys[r].coeffs.size(); ++j) A(r, j) = polys[r].coeffs[j];

    PluckerVector<T> out;
    out.nu = nu;
    double biggest = 0;
    std::vector<std::pair<Partition, T>> raw;
    std::vector<int> I(d);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == d) {
            Matrix<T> sub(d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) sub(r, c) = A(r, I[c] - 1);
            T minor = determinant(sub);
            raw.emplace_back(detail::index_set_partition(I), std::move(minor));
            biggest = std::max(biggest, scalar_traits<T>::abs_value(raw.back().second));
            return;
        }
        for (int v = start; v <= m - (d - depth - 1); ++v) {
            I[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);

    if (biggest == 0) throw std::invalid_argument("pluckers_from_basis: rank-deficient input");
    for (auto& [lam, v] : raw) {
        bool zero = scalar_traits<T>::exact ? v == scalar_traits<T>::zero()
                                            : scalar_traits<T>::abs_value(v) <= tol * biggest;
        if (zero) continue;
        if (!nu.contains(lam))
            throw std::invalid_argument("pluckers_from_basis: span lies outside the closed cell");
        out.entries[lam] = std::move(v);
    }
    if (out.at(nu) == scalar_traits<T>::zero())
        throw std::invalid_argument("pluckers_from_basis: span outside the open cell");
    return normalized(std::move(out));
}

/* Row-echelon basis of the cell element with the given normalized
 * coordinates: f_i has leading term u^{j_i-1}/(j_i-1)! and vanishing
 * coefficients at the other pivot positions, for pivot column set
 * J = (nu_d + 1, ..., nu_1 + d).  Requires d >= length(nu). */
template <class T>
std::vector<PolyVector<T>> echelon_basis(const PluckerVector<T>& delta, int d) {
    const Partition& nu = delta.nu;
    if (d < nu.length()) throw std::invalid_argument("echelon_basis: d < length(nu)");
    if (!is_normalized(delta)) throw std::invalid_argument("echelon_basis: input not normalized");
    T scale = scalar_traits<T>::from_rat(Rat(1) / cell_normalization(nu));
    std::vector<int> J(d);
    for (int i = 1; i <= d; ++i) J[i - 1] = nu.part(d - i + 1) + i;

    std::vector<PolyVector<T>> basis;
    for (int i = 1; i <= d; ++i) {
        int ji = J[i - 1];
        int sign1 = ((d - i) % 2 == 0) ? 1 : -1;
        PolyVector<T> f;
        f.coeffs.assign(ji, scalar_traits<T>::zero());
        for (int k = 1; k <= ji; ++k) {
            /* column set (J \ {j_i}) + k, alternating in k */
            if (k != ji && std::binary_search(J.begin(), J.end(), k)) continue;
            std::vector<int> cols;
            cols.reserve(d);
            for (int v : J)
                if (v != ji) cols.push_back(v);
            int p = static_cast<int>(std::lower_bound(cols.begin(), cols.end(), k) - cols.begin());
            int sign2 = ((d - 1 - p) % 2 == 0) ? 1 : -1;
            cols.insert(cols.begin() + p, k);
            Partition lam = detail::index_set_partition(cols);
            T v = delta.at(lam);
            if (v == scalar_traits<T>::zero()) continue;
            f.coeffs[k - 1] = T(sign1 * sign2) * scale * v;
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

/* Eigenvalue of the mu-indexed operator family as a polynomial in the
 * shift, read off one solution's coordinates:
 * p(s) = sum over lam in the cell containing mu of
 * (f^{lam/mu}/|lam/mu|!) Delta^lam s^{|lam|-|mu|}. */
template <class T>
Poly<T> beta_eval_poly(const PluckerVector<T>& delta, const Partition& mu) {
    Poly<T> p;
    for (const auto& [lam, v] : delta.entries) {
        if (!lam.contains(mu)) continue;
        int e = lam.size() - mu.size();
        p.set_coeff(e, p.coeff(e) + scalar_traits<T>::from_rat(syt_ratio(lam, mu)) * v);
    }
    return p;
}

/* the single-row families p_r for r = 0..r_max */
template <class T>
std::vector<Poly<T>> single_row_eval_polys(const PluckerVector<T>& delta, int r_max) {
    std::vector<Poly<T>> out(r_max + 1);
    for (int r = 0; r <= r_max; ++r)
        out[r] = beta_eval_poly(delta, r == 0 ? Partition{} : Partition{r});
    return out;
}

/* h_{t}(u) = sum_{k=d}^{m} p_{k-d}(-t) (u+t)^{k-1}/(k-1)! together with
 * its first d-1 partial derivatives in t, evaluated at the given t.
 * Degenerate at t in {z_i} (the family drops rank there), which is
 * rejected. */
template <class T>
std::vector<PolyVector<T>> h_basis(const std::vector<Poly<T>>& single_row_evals, int d, int m,
                                   const T& t, const std::vector<T>& z) {
    for (const auto& zi : z) {
        bool equal = scalar_traits<T>::exact
                         ? t == zi
                         : scalar_traits<T>::abs_value(t - zi) <=
                               1e-12 * (1.0 + scalar_traits<T>::abs_value(zi));
        if (equal) throw std::invalid_argument("h_basis: t coincides with a z value");
    }
    /* H[a] = coefficient of u^a as a polynomial in t */
    std::vector<Poly<T>> H(m);
    for (int k = d; k <= m; ++k) {
        int r = k - d;
        if (r >= static_cast<int>(single_row_evals.size())) break;
        /* q(t) = p_r(-t) */
        Poly<T> q;
        for (int a = 0; a <= single_row_evals[r].degree(); ++a)
            q.set_coeff(a, (a % 2 ? T(-1) : T(1)) * single_row_evals[r].coeff(a));
        for (int a = 0; a <= k - 1; ++a) {
            Rat c = Rat(1) / (factorial_rat(a) * factorial_rat(k - 1 - a));
            Poly<T> tp;
            tp.set_coeff(k - 1 - a, scalar_traits<T>::from_rat(c));
            H[a] += q * tp;
        }
    }
    std::vector<PolyVector<T>> out;
    for (int j = 0; j < d; ++j) {
        Poly<T> h;
        for (int a = 0; a < m; ++a) {
            Poly<T> dj = H[a];
            for (int rep = 0; rep < j; ++rep) dj = dj.derivative();
            h.set_coeff(a, dj.eval(t));
        }
        out.push_back(PolyVector<T>::from_poly(h));
    }
    return out;
}

template <class T>
PositivityVerdict positivity_check(const PluckerVector<T>& delta, PositivityMode mode,
                                   double tol) {
    PluckerVector<T> nd = normalized(delta);
    PositivityVerdict v;
    if (mode == PositivityMode::tnn) {
        for (const auto& [lam, val] : nd.entries) {
            double x = to_double(val);
            if (x < -tol) {
                v.ok = false;
                v.witness = lam;
                return v;
            }
        }
        return v;
    }
    for (int k = 0; k <= nd.nu.size(); ++k) {
        for (const auto& lam : partitions_of(k, std::nullopt, nd.nu)) {
            double x = to_double(nd.at(lam));
            if (x <= tol) {
                v.ok = false;
                v.witness = lam;
                return v;
            }
        }
    }
    return v;
}

namespace detail {

template <class T>
Poly<T> wronskian_det_exact(const std::vector<std::vector<Poly<T>>>& w) {
    /* column-subset expansion */
    size_t d = w.size();
    std::map<std::pair<size_t, unsigned>, Poly<T>> memo;
    std::function<Poly<T>(size_t, unsigned)> rec = [&](size_t row, unsigned used) -> Poly<T> {
        if (row == d) return Poly<T>::constant(T(1));
        auto key = std::make_pair(row, used);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Poly<T> acc;
        int seen = 0;
        for (size_t c = 0; c < d; ++c) {
            if (used & (1u << c)) continue;
            Poly<T> sub = rec(row + 1, used | (1u << c));
            Poly<T> term = w[row][c] * sub;
            if (seen % 2) term *= T(-1);
            acc += term;
            ++seen;
        }
        memo[key] = acc;
        return acc;
    };
    return rec(0, 0);
}

template <class T>
Poly<T> wronskian_det_interp(const std::vector<std::vector<Poly<T>>>& w, int deg_bound) {
    int npts = deg_bound + 1;
    std::vector<T> xs(npts), ys(npts);
    size_t d = w.size();
    for (int p = 0; p < npts; ++p) {
        xs[p] = T(p - deg_bound / 2);
        Matrix<T> m(d, d);
        for (size_t r = 0; r < d; ++r)
            for (size_t c = 0; c < d; ++c) m(r, c) = w[r][c].eval(xs[p]);
        ys[p] = determinant(std::move(m));
    }
    /* Newton interpolation */
    std::vector<T> coef = ys;
    for (int j = 1; j < npts; ++j)
        for (int i = npts - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    Poly<T> result = Poly<T>::constant(coef[npts - 1]);
    for (int i = npts - 2; i >= 0; --i) {
        Poly<T> lin(std::vector<T>{-xs[i], T(1)});
        result = result * lin + Poly<T>::constant(coef[i]);
    }
    return result;
}

}  // namespace detail

/* Determinant of the derivative matrix (f_i^{(j)}); exact expansion in
 * exact mode, evaluation-interpolation in float mode.  Rejects linearly
 * dependent input (identically zero Wronskian).  Optionally rescaled to
 * monic. */
template <class T>
Poly<T> wronskian_of_polys(const std::vector<PolyVector<T>>& polys, bool monic = false) {
    if (polys.empty()) throw std::invalid_argument("wronskian_of_polys: empty input");
    size_t d = polys.size();
    std::vector<std::vector<Poly<T>>> w(d, std::vector<Poly<T>>(d));
    int deg_bound = 0;
    for (size_t r = 0; r < d; ++r) {
        Poly<T> p = polys[r].to_poly();
        deg_bound += std::max(p.degree(), 0);
        for (size_t c = 0; c < d; ++c) {
            w[r][c] = p;
            p = p.derivative();
        }
    }
    /* column c is differentiated c times */
    deg_bound = std::max(0, deg_bound - static_cast<int>(d * (d - 1) / 2));
    Poly<T> det;
    if constexpr (scalar_traits<T>::exact)
        det = detail::wronskian_det_exact(w);
    else
        det = detail::wronskian_det_interp(w, deg_bound);

    bool zero;
    if constexpr (scalar_traits<T>::exact)
        zero = det.is_zero();
    else
        zero = det.max_abs_coeff() <= 1e-9;
    if (zero) throw std::invalid_argument("wronskian_of_polys: linearly dependent input");
    if (monic) {
        T lead = det.coeff(det.degree());
        std::vector<T> c(det.coeffs());
        for (auto& x : c) x = x / lead;
        det = Poly<T>(std::move(c));
    }
    return det;
}

}  // namespace bw
