#pragma once

#include <json.hpp>

#include "sjack/quadrature.hpp"

namespace sjack {

using Json = nlohmann::json;

inline Json to_json(const Partition& lam) { return Json(lam.parts()); }

inline Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

namespace detail {

/// Canonical term order for serialized polynomials: graded, then lex descending.
inline bool graded_lex_desc(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b < a;
}

} // namespace detail

inline Json to_json(const SymPoly& p, const std::string& basis = "m") {
    std::vector<Partition> keys;
    for (const auto& [k, c] : p.coeffs) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), detail::graded_lex_desc);
    Json terms = Json::array();
    for (const auto& k : keys)
        terms.push_back({{"key", to_json(k)}, {"c", p.coeffs.at(k).to_string()}});
    return {{"n", p.n}, {"basis", basis}, {"terms", terms}};
}

inline Json to_json(const PowerSumExpr& e) {
    std::vector<Partition> keys;
    for (const auto& [k, c] : e.coeffs) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), detail::graded_lex_desc);
    Json terms = Json::array();
    for (const auto& k : keys)
        terms.push_back({{"key", to_json(k)}, {"c", e.coeffs.at(k).to_string()}});
    return {{"basis", "p"}, {"terms", terms}};
}

inline Json to_json(const BiSymPoly& p) {
    std::vector<std::pair<Partition, Partition>> keys;
    for (const auto& [k, c] : p.coeffs) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        long wa = a.first.weight() + a.second.weight(), wb = b.first.weight() + b.second.weight();
        if (wa != wb) return wa < wb;
        if (a.first != b.first) return b.first < a.first;
        return b.second < a.second;
    });
    Json terms = Json::array();
    for (const auto& k : keys)
        terms.push_back({{"mu", to_json(k.first)},
                         {"nu", to_json(k.second)},
                         {"c", p.coeffs.at(k).to_string()}});
    return {{"n", p.n}, {"m", p.m}, {"terms", terms}};
}

inline Json to_json(const EigenData& d) {
    Json eig = Json::object();
    for (const auto& [r, v] : d.eigenvalues) eig[std::to_string(r)] = v.to_string();
    Json rho = Json::array();
    for (const auto& v : d.rho) rho.push_back(v.to_string());
    return {{"lambda", to_json(d.lambda)}, {"n", d.n},       {"m", d.m},
            {"nu", d.nu},                  {"rho", rho},     {"eigenvalues", eig},
            {"h_eigenvalue", d.h_eigenvalue.to_string()}};
}

inline Json to_json(const GramReport& rep) {
    Json index = Json::array();
    for (const auto& lam : rep.index) index.push_back(to_json(lam));
    Json values = Json::array();
    if (!rep.exact_values.empty()) {
        for (const auto& row : rep.exact_values) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(v.get_str());
            values.push_back(r);
        }
    } else {
        for (const auto& row : rep.numeric_values) values.push_back(row);
    }
    Json j = {{"method", rep.method},
              {"n", rep.n},
              {"m", rep.m},
              {"degree", rep.degree},
              {"cumulative", rep.cumulative},
              {"theta", rep.theta},
              {"index", index},
              {"values", values},
              {"max_offdiag_abs", rep.max_offdiag_abs},
              {"diag_vs_formula", rep.diag_vs_formula}};
    if (rep.method != "exact-ct") {
        j["xi"] = rep.xi;
        j["xi_prime"] = rep.xi_prime;
        j["grid"] = rep.grid;
        if (rep.method == "monte-carlo") {
            j["mc_samples"] = rep.mc_samples;
            j["seed"] = rep.seed;
        }
    }
    return j;
}

/// Round-trips a stored Gram report; exact values parse back to rationals.
inline GramReport gram_report_from_json(const Json& j) {
    GramReport rep;
    rep.method = j.at("method").get<std::string>();
    rep.n = j.at("n").get<int>();
    rep.m = j.at("m").get<int>();
    rep.degree = j.at("degree").get<int>();
    rep.cumulative = j.value("cumulative", false);
    rep.theta = j.at("theta").get<std::string>();
    for (const auto& lam : j.at("index")) rep.index.push_back(partition_from_json(lam));
    const auto& values = j.at("values");
    const bool exact = rep.method == "exact-ct";
    for (const auto& row : values) {
        if (exact) {
            std::vector<Rat> r;
            for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
            rep.exact_values.push_back(std::move(r));
        } else {
            rep.numeric_values.push_back(row.get<std::vector<double>>());
        }
    }
    rep.max_offdiag_abs = j.value("max_offdiag_abs", 0.0);
    rep.diag_vs_formula = j.value("diag_vs_formula", std::vector<double>{});
    rep.xi = j.value("xi", 0.0);
    rep.xi_prime = j.value("xi_prime", 0.0);
    rep.grid = j.value("grid", 0L);
    rep.mc_samples = j.value("mc_samples", 0L);
    rep.seed = j.value("seed", 0UL);
    return rep;
}

} // namespace sjack
