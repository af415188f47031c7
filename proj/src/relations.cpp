#include "bw/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace bw {

namespace {

bool fits_box(const Partition& p, int rows, int cols) {
    return p.length() <= rows && p.part(1) <= cols;
}

/* remove row i, add 1 to the first i-1 rows */
Partition row_removed(const Partition& lam, int i) {
    std::vector<int> parts;
    for (int t = 1; t < i; ++t) parts.push_back(lam.part(t) + 1);
    for (int t = i + 1; t <= lam.length(); ++t) parts.push_back(lam.part(t));
    return Partition(std::move(parts));
}

/* subtract 1 from every part >= j, then insert a part j-1 */
Partition column_added(const Partition& mu, int j, int& c_out) {
    int c = 0;
    while (c < mu.length() && mu.part(c + 1) >= j) ++c;
    c_out = c;
    std::vector<int> parts;
    for (int t = 1; t <= c; ++t) parts.push_back(mu.part(t) - 1);
    parts.push_back(j - 1);
    for (int t = c + 1; t <= mu.length(); ++t) parts.push_back(mu.part(t));
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

/* partitions fitting in a rows x cols box, outer order by (size, revlex) */
std::vector<Partition> box_partitions(int rows, int cols) {
    std::vector<Partition> out;
    for (int k = 0; k <= rows * cols; ++k)
        for (auto& p : partitions_of(k, rows))
            if (p.part(1) <= cols) out.push_back(std::move(p));
    return out;
}

}  // namespace

std::vector<RelationTerm> relation_signature(const PluckerRelation& r) {
    /* commutative collapse: Delta^a Delta^b == Delta^b Delta^a */
    std::map<std::pair<Partition, Partition>, int> acc;
    for (const auto& t : r.terms) {
        auto key = t.b < t.a ? std::make_pair(t.b, t.a) : std::make_pair(t.a, t.b);
        acc[key] += t.coeff;
    }
    std::vector<RelationTerm> sig;
    for (auto& [key, c] : acc)
        if (c != 0) sig.push_back(RelationTerm{c, key.first, key.second});
    if (sig.empty()) return sig;
    int g = 0;
    for (const auto& t : sig) g = std::gcd(g, std::abs(t.coeff));
    int lead = sig.front().coeff < 0 ? -g : g;
    for (auto& t : sig) t.coeff /= lead;
    return sig;
}

std::optional<PluckerRelation> plucker_relation_for(const Partition& lam, const Partition& mu,
                                                    int d, int m) {
    PluckerRelation rel;
    /* term (i,j) exists iff (i-1-lam_i) + (j-1-mu'_j) = 1 */
    for (int i = 1; i <= d + 2; ++i) {
        int left = (i - 1) - lam.part(i);
        int need = 1 - left;
        for (int j = 1; j <= m - d + 2; ++j) {
            int c = 0;
            while (c < mu.length() && mu.part(c + 1) >= j) ++c;
            if (j - 1 - c != need) continue;
            int c_out = 0;
            Partition a = row_removed(lam, i);
            Partition b = column_added(mu, j, c_out);
            if (!fits_box(a, d, m - d) || !fits_box(b, d, m - d)) continue;
            int sign = ((i + c_out + 1) % 2 == 0) ? 1 : -1;
            rel.terms.push_back(RelationTerm{sign, std::move(a), std::move(b)});
        }
    }
    if (relation_signature(rel).empty()) return std::nullopt;
    return rel;
}

std::vector<PluckerRelation> plucker_relations(int d, int m, RelationFamily family) {
    if (d < 1 || d > m) throw std::invalid_argument("plucker_relations: need 1 <= d <= m");
    std::vector<Partition> lams, mus;
    if (family == RelationFamily::single_column)
        lams = {Partition{}};
    else
        lams = box_partitions(d + 1, m - d - 1);
    if (family == RelationFamily::single_row)
        mus = {Partition{}};
    else
        mus = box_partitions(d - 1, m - d + 1);

    std::vector<PluckerRelation> out;
    std::set<std::vector<std::tuple<int, std::vector<int>, std::vector<int>>>> seen;
    for (const auto& lam : lams) {
        for (const auto& mu : mus) {
            auto rel = plucker_relation_for(lam, mu, d, m);
            if (!rel) continue;
            auto sig = relation_signature(*rel);
            std::vector<std::tuple<int, std::vector<int>, std::vector<int>>> key;
            key.reserve(sig.size());
            for (auto& t : sig) key.emplace_back(t.coeff, t.a.parts(), t.b.parts());
            if (seen.insert(std::move(key)).second) out.push_back(std::move(*rel));
        }
    }
    return out;
}

}  // namespace bw
