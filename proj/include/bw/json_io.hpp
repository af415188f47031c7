#pragma once

#include <json.hpp>

#include <charconv>
#include <string>

#include "bw/grassmann.hpp"
#include "bw/solver.hpp"

namespace bw {

using nlohmann::json;

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

/* one-line image array, 1-based */
json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

/* shortest round-trip decimal form */
std::string double_to_string(double x);

inline std::string scalar_to_string(const Rat& q) { return to_string(q); }
inline std::string scalar_to_string(double x) { return double_to_string(x); }

template <class T>
const char* scalar_mode_name() {
    return scalar_traits<T>::exact ? "exact" : "float";
}

template <class T>
json plucker_to_json(const PluckerVector<T>& delta) {
    json entries = json::array();
    for (const auto& [lam, v] : delta.entries)
        entries.push_back(json{{"lam", partition_to_json(lam)}, {"value", scalar_to_string(v)}});
    return json{{"nu", partition_to_json(delta.nu)},
                {"entries", std::move(entries)},
                {"mode", scalar_mode_name<T>()}};
}

template <class T>
PluckerVector<T> plucker_from_json(const json& j) {
    PluckerVector<T> out;
    out.nu = partition_from_json(j.at("nu"));
    for (const auto& e : j.at("entries")) {
        Rat q = rat_from_string(e.at("value").get<std::string>());
        out.set(partition_from_json(e.at("lam")), scalar_traits<T>::from_rat(q));
    }
    return out;
}

/* coefficients in the u^{j-1}/(j-1)! basis, as exact-or-decimal strings */
template <class T>
json polyvector_to_json(const PolyVector<T>& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs) coeffs.push_back(scalar_to_string(c));
    return json{{"coeffs_e_basis", std::move(coeffs)}};
}

json solution_to_json(const Solution& sol);

}  // namespace bw
