#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bw/combinatorics.hpp"
#include "bw/matrix.hpp"

namespace bw {

enum class RepForm { seminormal_exact, orthogonal_float };

struct Tableau {
    std::vector<std::vector<int>> rows;
    /* reading word: rows bottom to top, each left to right */
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it)
            w.insert(w.end(), it->begin(), it->end());
        return w;
    }
};

/* All standard Young tableaux of shape nu, sorted by reading word.
 * This order fixes the basis of every representation built here, so
 * generator matrices are bit-reproducible. */
std::vector<Tableau> standard_tableaux(const Partition& nu);

/* Matrix model of the irreducible representation indexed by nu, given by
 * the images of the adjacent transpositions s_1..s_{n-1} in Young's
 * seminormal form (exact rational entries, T = Rat) or Young's orthogonal
 * form (double entries, orthogonal generator matrices).  Matrices act on
 * column vectors: column t of gens()[i] is the image of basis vector t. */
template <class T>
class SpechtRep {
  public:
    SpechtRep(Partition nu, std::vector<Matrix<T>> gens, size_t dim)
        : nu_(std::move(nu)), n_(nu_.size()), dim_(dim), gens_(std::move(gens)) {}

    SpechtRep(SpechtRep&& o) noexcept
        : nu_(std::move(o.nu_)),
          n_(o.n_),
          dim_(o.dim_),
          gens_(std::move(o.gens_)),
          memo_(std::move(o.memo_)) {}
    SpechtRep(const SpechtRep&) = delete;
    SpechtRep& operator=(const SpechtRep&) = delete;

    const Partition& nu() const { return nu_; }
    int n() const { return n_; }
    size_t dim() const { return dim_; }
    const std::vector<Matrix<T>>& gens() const { return gens_; }
    static constexpr RepForm form() {
        return scalar_traits<T>::exact ? RepForm::seminormal_exact : RepForm::orthogonal_float;
    }

    /* Image of an arbitrary permutation: generator matrices multiplied
     * along a descent factorization, memoized per permutation. */
    const Matrix<T>& matrix(const Permutation& sigma) const {
        if (sigma.n() != n_) throw std::invalid_argument("rep_matrix: wrong symmetric group");
        {
            std::lock_guard<std::mutex> lk(memo_mutex_);
            auto it = memo_.find(sigma.images());
            if (it != memo_.end()) return it->second;
        }
        Matrix<T> m = compute(sigma);
        std::lock_guard<std::mutex> lk(memo_mutex_);
        return memo_.emplace(sigma.images(), std::move(m)).first->second;
    }

  private:
    Matrix<T> compute(const Permutation& sigma) const {
        /* find a descent: sigma = sigma' * s_i with fewer inversions */
        for (int i = 1; i < n_; ++i) {
            if (sigma(i) > sigma(i + 1)) {
                std::vector<int> img = sigma.images();
                std::swap(img[i - 1], img[i]);
                return matrix(Permutation(std::move(img))) * gens_[i - 1];
            }
        }
        return Matrix<T>::identity(dim_);
    }

    Partition nu_;
    int n_;
    size_t dim_;
    std::vector<Matrix<T>> gens_;
    mutable std::map<std::vector<int>, Matrix<T>> memo_;
    mutable std::mutex memo_mutex_;
};

namespace detail {
/* positions[v] = (row, col), 1-based, of v in the tableau */
std::vector<std::pair<int, int>> tableau_positions(const Tableau& t, int n);
int tableau_index_after_swap(const std::vector<Tableau>& tabs, const Tableau& t, int i);
}  // namespace detail

template <class T>
SpechtRep<T> build_rep(const Partition& nu) {
    int n = nu.size();
    if (n < 1) throw std::invalid_argument("build_rep: need |nu| >= 1");
    std::vector<Tableau> tabs = standard_tableaux(nu);
    size_t dim = tabs.size();
    std::vector<Matrix<T>> gens;
    gens.reserve(n > 1 ? n - 1 : 0);
    for (int i = 1; i < n; ++i) {
        Matrix<T> g(dim, dim);
        for (size_t t = 0; t < dim; ++t) {
            auto pos = detail::tableau_positions(tabs[t], n);
            auto [r1, c1] = pos[i];
            auto [r2, c2] = pos[i + 1];
            int d = (c2 - r2) - (c1 - r1);  // content(i+1) - content(i)
            if (r1 == r2) {
                g(t, t) = T(1);
            } else if (c1 == c2) {
                g(t, t) = T(-1);
            } else {
                int other = detail::tableau_index_after_swap(tabs, tabs[t], i);
                if constexpr (scalar_traits<T>::exact) {
                    g(t, t) = T(1) / T(d);
                    g(other, t) = d > 0 ? T(1) - T(1) / (T(d) * T(d)) : T(1);
                } else {
                    double dd = static_cast<double>(d);
                    g(t, t) = 1.0 / dd;
                    g(other, t) = std::sqrt(1.0 - 1.0 / (dd * dd));
                }
            }
        }
        gens.push_back(std::move(g));
    }
    return SpechtRep<T>(nu, std::move(gens), dim);
}

/* chi-weighted group-algebra element sum_{sigma in S_X} chi^lam(sigma) sigma,
 * as a matrix on the given representation.  Requires |X| = |lam|. */
template <class T>
Matrix<T> alpha_matrix(const SpechtRep<T>& rep, const Partition& lam, const std::vector<int>& X) {
    if (static_cast<int>(X.size()) != lam.size())
        throw std::invalid_argument("alpha_matrix: need |X| = |lam|");
    int n = rep.n();
    std::vector<int> Xs = X;
    std::sort(Xs.begin(), Xs.end());
    Matrix<T> acc(rep.dim(), rep.dim());
    std::vector<int> img(Xs.begin(), Xs.end());
    do {
        std::vector<int> full(n);
        for (int v = 1; v <= n; ++v) full[v - 1] = v;
        for (size_t i = 0; i < Xs.size(); ++i) full[Xs[i] - 1] = img[i];
        Permutation sigma{std::move(full)};
        long long chi = character(lam, cycle_type_on(sigma, Xs));
        if (chi != 0) acc.add_scaled(rep.matrix(sigma), T(static_cast<int>(chi)));
    } while (std::next_permutation(img.begin(), img.end()));
    return acc;
}

using SeminormalRep = SpechtRep<Rat>;
using OrthogonalRep = SpechtRep<double>;

}  // namespace bw
