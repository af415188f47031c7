#include "bw/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bw {

void Partition::normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative partition part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition conjugate(const Partition& lam) { return lam.conjugate(); }

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
            throw std::invalid_argument("image vector is not a bijection");
        seen[v - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= n(); ++i) inv[img_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> img(a.n());
    for (int i = 1; i <= a.n(); ++i) img[i - 1] = a(b(i));
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<bool> seen(img_.size(), false);
    int s = 1;
    for (int i = 1; i <= n(); ++i) {
        if (seen[i - 1]) continue;
        int len = 0, j = i;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            j = img_[j - 1];
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (int i = 1; i <= n(); ++i) {
        if (seen[i - 1]) continue;
        int len = 0, j = i;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            j = img_[j - 1];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

std::vector<int> Permutation::support() const {
    std::vector<int> s;
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) s.push_back(i);
    return s;
}

Partition cycle_type_on(const Permutation& sigma, const std::vector<int>& X) {
    std::vector<int> lens;
    std::vector<bool> seen(X.size(), false);
    auto pos = [&](int v) {
        auto it = std::lower_bound(X.begin(), X.end(), v);
        return (it != X.end() && *it == v) ? static_cast<int>(it - X.begin()) : -1;
    };
    for (size_t i = 0; i < X.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            int img = sigma(X[j]);
            int pj = pos(img);
            if (pj < 0) throw std::invalid_argument("permutation does not preserve X");
            j = static_cast<size_t>(pj);
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int k, std::optional<int> max_length,
                                     const std::optional<Partition>& inside) {
    if (k < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> all;
    std::vector<int> cur;
    gen_partitions(k, k == 0 ? 1 : k, cur, all);
    std::vector<Partition> out;
    for (auto& p : all) {
        if (max_length && p.length() > *max_length) continue;
        if (inside && !inside->contains(p)) continue;
        out.push_back(std::move(p));
    }
    return out;
}

Rat syt_ratio(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) throw std::invalid_argument("syt_ratio: mu not contained in lam");
    int d = std::max(lam.length(), 1);
    /* det( 1/(lam_i - i - mu_j + j)! ), with 1/(negative)! = 0 */
    std::vector<Rat> m(static_cast<size_t>(d) * d, Rat(0));
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            int a = lam.part(i) - i - mu.part(j) + j;
            if (a >= 0) m[(i - 1) * d + j - 1] = Rat(1) / factorial_rat(a);
        }
    }
    /* small exact determinant, expansion by elimination */
    Rat det(1);
    for (int c = 0; c < d; ++c) {
        int p = c;
        while (p < d && m[p * d + c] == 0) ++p;
        if (p == d) return Rat(0);
        if (p != c) {
            for (int j = c; j < d; ++j) std::swap(m[p * d + j], m[c * d + j]);
            det = -det;
        }
        det *= m[c * d + c];
        for (int r = c + 1; r < d; ++r) {
            if (m[r * d + c] == 0) continue;
            Rat f = m[r * d + c] / m[c * d + c];
            for (int j = c; j < d; ++j) m[r * d + j] -= f * m[c * d + j];
        }
    }
    return det;
}

unsigned long long num_syt(const Partition& lam, const std::optional<Partition>& mu) {
    Partition m = mu.value_or(Partition{});
    if (!lam.contains(m)) throw std::invalid_argument("num_syt: mu not contained in lam");
    int cells = lam.size() - m.size();
    Rat f = syt_ratio(lam, m) * factorial_rat(cells);
    if (f.get_den() != 1 || f < 0) throw std::logic_error("num_syt: non-integral count");
    return mpz_class(f.get_num()).get_ui();
}

namespace {

/* Murnaghan–Nakayama via first-column hook lengths (beta numbers).
 * Removing a border strip of size m from lam corresponds to choosing
 * b in B with b - m >= 0 and b - m not in B; the height of the strip
 * is the number of elements of B strictly between b - m and b. */
long long mn_character(std::vector<int> beta, std::vector<int> mu);

std::map<std::pair<std::vector<int>, std::vector<int>>, long long> mn_memo;
std::mutex mn_mutex;

std::vector<int> beta_numbers(const Partition& lam) {
    int d = lam.length();
    std::vector<int> b(d);
    for (int i = 1; i <= d; ++i) b[i - 1] = lam.part(i) + d - i;
    return b;  // strictly decreasing
}

long long mn_character(std::vector<int> beta, std::vector<int> mu) {
    if (mu.empty()) return 1;
    auto key = std::make_pair(beta, mu);
    {
        std::lock_guard<std::mutex> lk(mn_mutex);
        auto it = mn_memo.find(key);
        if (it != mn_memo.end()) return it->second;
    }
    int m = mu.front();
    std::vector<int> rest(mu.begin() + 1, mu.end());
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - m;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        long long sub = mn_character(nb, rest);
        total += (between % 2 ? -sub : sub);
    }
    {
        std::lock_guard<std::mutex> lk(mn_mutex);
        mn_memo[key] = total;
    }
    return total;
}

}  // namespace

long long character(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("character: |lam| != |mu|");
    if (lam.empty()) return 1;
    return mn_character(beta_numbers(lam), mu.parts());
}

Rat class_centralizer_order(const Partition& mu) {
    Rat z(1);
    int run = 0, prev = -1;
    for (int i = 1; i <= mu.length() + 1; ++i) {
        int p = mu.part(i);
        if (p == prev) {
            ++run;
        } else {
            if (prev > 0) z *= factorial_rat(run);
            prev = p;
            run = 1;
        }
        if (p > 0) z *= Rat(p);
    }
    if (prev > 0) z *= factorial_rat(run);
    return z;
}

void for_each_supported_permutation(int n, int k,
                                    const std::function<void(const SupportedPermutation&)>& fn) {
    if (k < 0 || k > n) throw std::invalid_argument("supported_permutations: need 0 <= k <= n");
    std::vector<int> X(k);
    /* subsets of [n] of size k in lexicographic order */
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            std::vector<int> img(X.begin(), X.end());
            std::sort(img.begin(), img.end());
            do {
                std::vector<int> full(n);
                std::iota(full.begin(), full.end(), 1);
                for (int i = 0; i < k; ++i) full[X[i] - 1] = img[i];
                SupportedPermutation sp;
                sp.perm = Permutation(std::move(full));
                sp.support_set = X;
                sp.cycle_type = cycle_type_on(sp.perm, X);
                fn(sp);
            } while (std::next_permutation(img.begin(), img.end()));
            return;
        }
        for (int v = start; v <= n - (k - depth - 1); ++v) {
            X[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
}

std::vector<SupportedPermutation> supported_permutations(int n, int k) {
    std::vector<SupportedPermutation> out;
    for_each_supported_permutation(n, k, [&](const SupportedPermutation& sp) { out.push_back(sp); });
    return out;
}

long long count_z_factorizations(const Permutation& theta, const std::vector<int>& Z,
                                 const Partition& lam, const Partition& mu) {
    int n = theta.n();
    std::vector<int> Zs = Z;
    std::sort(Zs.begin(), Zs.end());
    Zs.erase(std::unique(Zs.begin(), Zs.end()), Zs.end());
    for (int v : Zs)
        if (v < 1 || v > n) throw std::invalid_argument("count_z_factorizations: Z not in [n]");
    int k = lam.size();
    /* |Y| = n - |X| + |Z| must equal |mu| */
    if (static_cast<int>(Zs.size()) > k || n - k + static_cast<int>(Zs.size()) != mu.size())
        return 0;

    long long count = 0;
    /* enumerate X containing Z with |X| = k */
    std::vector<int> pool;
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(Zs.begin(), Zs.end(), v)) pool.push_back(v);
    int extra = k - static_cast<int>(Zs.size());
    std::vector<int> pick(extra);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == extra) {
            std::vector<int> X = Zs;
            X.insert(X.end(), pick.begin(), pick.begin() + extra);
            std::sort(X.begin(), X.end());
            std::vector<int> Y = Zs;
            for (int v : pool)
                if (!std::binary_search(X.begin(), X.end(), v)) Y.push_back(v);
            std::sort(Y.begin(), Y.end());
            /* sigma in S_X with cyc = lam, then pi = sigma^{-1} theta */
            std::vector<int> img(X.begin(), X.end());
            do {
                std::vector<int> full(n);
                std::iota(full.begin(), full.end(), 1);
                for (int i = 0; i < k; ++i) full[X[i] - 1] = img[i];
                Permutation sigma{std::vector<int>(full)};
                if (!(cycle_type_on(sigma, X) == lam)) continue;
                Permutation pi = sigma.inverse() * theta;
                bool ok = true;
                for (int v = 1; v <= n && ok; ++v)
                    if (pi(v) != v && !std::binary_search(Y.begin(), Y.end(), v)) ok = false;
                if (!ok) continue;
                if (cycle_type_on(pi, Y) == mu) ++count;
            } while (std::next_permutation(img.begin(), img.end()));
            return;
        }
        for (size_t i = start; i < pool.size(); ++i) {
            pick[depth] = pool[i];
            rec(static_cast<int>(i + 1), depth + 1);
        }
    };
    rec(0, 0);
    return count;
}

}  // namespace bw
