#pragma once

// The extremality arithmetic around the divisors D_k = Lambda_{(k,1,-1..-1)}
// on the space with k+5 markings, and the hypertree divisor-class database.

#include <functional>
#include <vector>

#include "m0nbar/chen_coskun.hpp"
#include "m0nbar/divisor_class.hpp"
#include "m0nbar/hypertree.hpp"

namespace m0nbar {

inline WeightVector dk_weights(long long k) {
    if (k < 1) throw bad_k("D_k is defined for k >= 1");
    std::vector<long long> a{k, 1};
    a.insert(a.end(), static_cast<std::size_t>(k) + 1, -1);
    return WeightVector(std::move(a));
}

struct PairingReport {
    long long k = 0;
    long long degree_term = 0; // (k+1)(k+1)
    long long point_term = 0;  // (k)(k)
    long long span_term = 0;   // (1)(2k+2)
    long long pairing = 0;     // degree_term - point_term - span_term
};

// Intersection of D_k with the general member of its covering family of
// curves. The three inputs are read off the computed class of D_k rather
// than hard-coded, so a regression anywhere upstream breaks the -1.
inline PairingReport dk_pairing(long long k) {
    const DivisorClass cls = class_in_basis(dk_weights(k), 1);

    const long long h = cls.h_coeff();
    if (h != k + 1) throw class_mismatch("H-coefficient of D_k is not k+1");
    const long long point_mult = cls.coefficient(IndexSet{2});
    if (point_mult != k) throw class_mismatch("E_{2}-coefficient of D_k is not k");

    const int special_a = static_cast<int>(k) + 4;
    const int special_b = static_cast<int>(k) + 5;
    long long span_count = 0;
    for (const auto& [I, coeff] : cls.e_coeffs()) {
        if (static_cast<long long>(I.size()) != k + 1) continue;
        if (std::binary_search(I.begin(), I.end(), 2)) continue;
        int met = static_cast<int>(std::binary_search(I.begin(), I.end(), special_a)) +
                  static_cast<int>(std::binary_search(I.begin(), I.end(), special_b));
        if (met == 1 && coeff == 1) ++span_count;
    }
    if (span_count != 2 * k + 2) throw class_mismatch("codimension-2 span count of D_k is not 2k+2");

    PairingReport report;
    report.k = k;
    report.degree_term = h * h;
    report.point_term = point_mult * k;
    report.span_term = span_count;
    report.pairing = report.degree_term - report.point_term - report.span_term;
    return report;
}

struct CounterexampleReport {
    long long k = 0;
    long long pullback_h_coeff = 0;      // 2k+1
    long long hypertree_degree_bound = 0; // k+2: max degree of a hypertree equation on k+5 markings
    bool is_counterexample = false;
};

// D_k cannot be a hypertree divisor (or a pullback of one) whenever the
// H-coefficient of its pullback exceeds the degree any hypertree equation
// on that many markings can have. The H-coefficient is the closed-form
// degree, sum |a_i| - 1; the full class is never materialized.
inline CounterexampleReport counterexample_check(long long k) {
    CounterexampleReport report;
    report.k = k;
    report.pullback_h_coeff = dk_weights(k).abs_sum() - 1;
    report.hypertree_degree_bound = k + 2;
    report.is_counterexample = report.pullback_h_coeff > report.hypertree_degree_bound;
    return report;
}

struct DatabaseRecord {
    int n = 0;
    Hypertree hypertree;
    DivisorClass divisor_class{4, 1, 0, {}};
    long long automorphism_order = 0;
    int polynomial_degree = 0;
};

inline DatabaseRecord make_database_record(int n, const Hypertree& h) {
    const Polynomial poly = divisor_polynomial(h);
    DatabaseRecord record{n, h, class_from_polynomial(poly, n, 1), automorphism_group_size(h), poly.degree()};
    return record;
}

// One record per irreducible hypertree, n_min..n_max, in enumeration order.
// The callback variant exists so callers can flush incrementally.
inline void build_database(int n_min, int n_max, const std::function<bool(const DatabaseRecord&)>& sink) {
    if (n_min < 6 || n_max > 10 || n_min > n_max)
        throw unsupported_n("database range must satisfy 6 <= n_min <= n_max <= 10");
    for (int n = n_min; n <= n_max; ++n)
        for (const Hypertree& h : enumerate_irreducible(n))
            if (!sink(make_database_record(n, h))) return;
}

inline std::vector<DatabaseRecord> build_database(int n_min, int n_max) {
    std::vector<DatabaseRecord> records;
    build_database(n_min, n_max, [&](const DatabaseRecord& r) {
        records.push_back(r);
        return true;
    });
    return records;
}

} // namespace m0nbar
