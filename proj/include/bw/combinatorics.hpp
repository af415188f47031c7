#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bw/rat.hpp"

namespace bw {

/* Weakly decreasing sequence of positive integers.  Trailing zeros are
 * normalized away on construction, so equality and ordering act on the
 * canonical form; the empty partition is valid and has size 0. */
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /* part(i) is 0 beyond the stored length (1-based) */
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    const std::vector<int>& parts() const { return parts_; }

    bool contains(const Partition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    /* size first, then reverse-lexicographic: a canonical total order */
    bool operator<(const Partition& o) const {
        int a = size(), b = o.size();
        if (a != b) return a < b;
        return parts_ > o.parts_;
    }

    std::string str() const;

  private:
    void normalize();
    std::vector<int> parts_;
};

/* A bijection of {1..n}, stored as a 1-based image vector. */
class Permutation {
  public:
    Permutation() = default;
    static Permutation identity(int n);
    explicit Permutation(std::vector<int> images);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);  // (a*b)(i)=a(b(i))

    int sign() const;
    Partition cycle_type() const;
    std::vector<int> support() const;  // sorted {i : sigma(i) != i}

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

  private:
    std::vector<int> img_;
};

/* A pair (sigma, X): every non-fixed point of sigma lies in X, and fixed
 * points inside X contribute 1-cycles to the cycle type. */
struct SupportedPermutation {
    Permutation perm;              // as an element of S_n fixing [n] \ X
    std::vector<int> support_set;  // X, sorted
    Partition cycle_type;          // cyc(sigma_X), a partition of |X|
};

/* All partitions of k, reverse-lexicographic, optionally filtered by
 * length and by containment in `inside`. */
std::vector<Partition> partitions_of(int k, std::optional<int> max_length = std::nullopt,
                                     const std::optional<Partition>& inside = std::nullopt);

/* Number of standard Young tableaux of shape lam/mu.  Straight shapes use
 * the hook-length product, skew shapes the factorial determinant, both in
 * exact arithmetic.  Throws if mu is not contained in lam. */
unsigned long long num_syt(const Partition& lam, const std::optional<Partition>& mu = std::nullopt);

/* f^{lam/mu} / |lam/mu|! as an exact rational (the form most identities
 * want; avoids overflow concerns entirely). */
Rat syt_ratio(const Partition& lam, const Partition& mu);
inline Rat syt_ratio(const Partition& lam) { return syt_ratio(lam, Partition{}); }

Partition conjugate(const Partition& lam);

/* Irreducible symmetric group character chi^lam on the class mu, by the
 * Murnaghan–Nakayama rule with memoization.  Requires |lam| == |mu|. */
long long character(const Partition& lam, const Partition& mu);

/* n!/|C_mu|: order of the centralizer of the class mu. */
Rat class_centralizer_order(const Partition& mu);

/* Streams all pairs (sigma, X) with X subseteq [n], |X| = k, sigma in S_X,
 * in a fixed deterministic order (subsets lex, then image tuples lex). */
void for_each_supported_permutation(int n, int k,
                                    const std::function<void(const SupportedPermutation&)>& fn);
std::vector<SupportedPermutation> supported_permutations(int n, int k);

/* #Fac_{theta,Z}(lam,mu): pairs (sigma_X, pi_Y) with X u Y = [n],
 * X n Y = Z, sigma*pi = theta, cyc(sigma_X) = lam, cyc(pi_Y) = mu. */
long long count_z_factorizations(const Permutation& theta, const std::vector<int>& Z,
                                 const Partition& lam, const Partition& mu);

/* cycle type of sigma restricted to X (fixed points of X count as 1s) */
Partition cycle_type_on(const Permutation& sigma, const std::vector<int>& X);

}  // namespace bw
