#pragma once

// JSON encodings of the public value types. These are the wire/database
// formats, so key names and ordering are part of the contract:
// class terms are listed by (|I|, lexicographic members).

#include <json.hpp>

#include "m0nbar/chen_coskun.hpp"
#include "m0nbar/divisor_class.hpp"
#include "m0nbar/extremal.hpp"
#include "m0nbar/hypertree.hpp"

namespace m0nbar {

using nlohmann::json;

inline json to_json(const DivisorClass& c) {
    json terms = json::array();
    for (const auto& [I, coeff] : c.e_coeffs())
        terms.push_back({{"I", I}, {"coeff", coeff}});
    return {{"n", c.n()}, {"basis_index", c.basis_index()}, {"h", c.h_coeff()}, {"terms", terms}};
}

inline DivisorClass divisor_class_from_json(const json& j) {
    DivisorClass::CoeffMap coeffs;
    for (const auto& term : j.at("terms")) {
        IndexSet I = make_index_set(term.at("I").get<std::vector<int>>());
        coeffs[I] += term.at("coeff").get<long long>();
    }
    return DivisorClass(j.at("n").get<int>(), j.at("basis_index").get<int>(),
                        j.at("h").get<long long>(), std::move(coeffs));
}

inline json to_json(const Hypertree& h) {
    return {{"n", h.n}, {"blocks", h.blocks}};
}

inline Hypertree hypertree_from_json(const json& j, bool zero_based = false) {
    auto blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    if (zero_based)
        for (auto& block : blocks)
            for (int& v : block) ++v;
    return Hypertree(j.at("n").get<int>(), std::move(blocks));
}

inline json to_json(const ValidationReport& r) {
    json j{{"valid", r.valid()},
           {"block_sizes_ok", r.block_sizes_ok},
           {"coverage_ok", r.coverage_ok},
           {"convexity_ok", r.convexity_ok},
           {"normalization_ok", r.normalization_ok}};
    if (!r.convexity_violation.empty()) j["convexity_violation"] = r.convexity_violation;
    return j;
}

inline json to_json(const PairingReport& r) {
    return {{"k", r.k},
            {"degree_term", r.degree_term},
            {"point_term", r.point_term},
            {"span_term", r.span_term},
            {"pairing", r.pairing}};
}

inline json to_json(const CounterexampleReport& r) {
    return {{"k", r.k},
            {"pullback_h_coeff", r.pullback_h_coeff},
            {"hypertree_degree_bound", r.hypertree_degree_bound},
            {"is_counterexample", r.is_counterexample}};
}

inline json to_json(const DatabaseRecord& r) {
    return {{"n", r.n},
            {"hypertree", to_json(r.hypertree)},
            {"class", to_json(r.divisor_class)},
            {"automorphism_order", r.automorphism_order},
            {"polynomial_degree", r.polynomial_degree}};
}

} // namespace m0nbar
