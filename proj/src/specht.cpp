#include "bw/specht.hpp"

#include <algorithm>

namespace bw {

namespace {

void grow(const Partition& nu, std::vector<std::vector<int>>& rows, int next, int n,
          std::vector<Tableau>& out) {
    if (next > n) {
        out.push_back(Tableau{rows});
        return;
    }
    for (int r = 0; r < nu.length(); ++r) {
        int filled = static_cast<int>(rows[r].size());
        if (filled >= nu.part(r + 1)) continue;
        if (r > 0 && static_cast<int>(rows[r - 1].size()) <= filled) continue;
        rows[r].push_back(next);
        grow(nu, rows, next + 1, n, out);
        rows[r].pop_back();
    }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& nu) {
    std::vector<Tableau> out;
    std::vector<std::vector<int>> rows(nu.length());
    grow(nu, rows, 1, nu.size(), out);
    std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

namespace detail {

std::vector<std::pair<int, int>> tableau_positions(const Tableau& t, int n) {
    std::vector<std::pair<int, int>> pos(n + 1);
    for (size_t r = 0; r < t.rows.size(); ++r)
        for (size_t c = 0; c < t.rows[r].size(); ++c)
            pos[t.rows[r][c]] = {static_cast<int>(r + 1), static_cast<int>(c + 1)};
    return pos;
}

int tableau_index_after_swap(const std::vector<Tableau>& tabs, const Tableau& t, int i) {
    Tableau s = t;
    for (auto& row : s.rows)
        for (auto& v : row) {
            if (v == i)
                v = i + 1;
            else if (v == i + 1)
                v = i;
        }
    auto w = s.reading_word();
    for (size_t k = 0; k < tabs.size(); ++k)
        if (tabs[k].reading_word() == w) return static_cast<int>(k);
    throw std::logic_error("swapped tableau is not standard");
}

}  // namespace detail

}  // namespace bw
