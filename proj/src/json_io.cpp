#include "bw/json_io.hpp"

namespace bw {

json partition_to_json(const Partition& p) {
    json arr = json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

json permutation_to_json(const Permutation& p) {
    json arr = json::array();
    for (int v : p.images()) arr.push_back(v);
    return arr;
}

Permutation permutation_from_json(const json& j) {
    std::vector<int> img;
    for (const auto& v : j) img.push_back(v.get<int>());
    return Permutation(std::move(img));
}

std::string double_to_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

json solution_to_json(const Solution& sol) {
    json vecs = json::array();
    for (const auto& v : sol.eigenvectors) {
        json row = json::array();
        for (double x : v) row.push_back(double_to_string(x));
        vecs.push_back(std::move(row));
    }
    return json{{"delta", plucker_to_json(sol.delta)},
                {"multiplicity", sol.multiplicity},
                {"eigenvectors", std::move(vecs)},
                {"residuals",
                 {{"wronskian", sol.residuals.wronskian},
                  {"relations", sol.residuals.relations},
                  {"eigen", sol.residuals.eigen}}}};
}

}  // namespace bw
