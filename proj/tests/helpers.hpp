#pragma once

// Shared fixtures, generators and independent oracles for the test suites.
// The oracles here deliberately avoid the production code paths they check:
// the cofactor determinant knows nothing about Bareiss elimination.

#include <random>
#include <vector>

#include "m0nbar/m0nbar.hpp"

namespace testutil {

using m0nbar::Hypertree;
using m0nbar::Integer;
using m0nbar::Polynomial;
using m0nbar::PolyMatrix;

inline Polynomial x(int i) { return Polynomial::variable(i); }

inline Hypertree complete_quadrilateral() {
    return Hypertree(6, {{1, 2, 3}, {2, 4, 5}, {1, 5, 6}, {3, 4, 6}});
}

// Cofactor expansion along the first row; exponential, sizes <= 4 only.
inline Polynomial cofactor_determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw m0nbar::non_square();
    const int n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Polynomial det;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Polynomial term = m.at(0, j) * cofactor_determinant(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    Polynomial polynomial(int max_vars = 8, int max_terms = 20, int max_exp = 3, int max_coeff = 9) {
        Polynomial p;
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) {
            std::vector<m0nbar::Monomial::Entry> entries;
            int nvars = uniform(0, 3);
            for (int v = 0; v < nvars; ++v)
                entries.emplace_back(uniform(1, max_vars), uniform(1, max_exp));
            int c = uniform(-max_coeff, max_coeff);
            if (c != 0) p += Polynomial::term(c, m0nbar::Monomial::make(std::move(entries)));
        }
        return p;
    }

    Polynomial nonzero_polynomial(int max_vars = 8, int max_terms = 20) {
        for (;;) {
            Polynomial p = polynomial(max_vars, max_terms);
            if (!p.is_zero()) return p;
        }
    }

    PolyMatrix matrix(int n, int zero_percent = 20) {
        PolyMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (uniform(0, 99) >= zero_percent) m.at(r, c) = polynomial(3, 3, 2, 4);
        return m;
    }

    std::vector<int> permutation(int n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), gen);
        return perm;
    }

    // Weight vector with |a_i| <= max_abs, sum zero, gcd one.
    std::vector<long long> weights(int n, int max_abs = 3) {
        for (;;) {
            std::vector<long long> a(static_cast<std::size_t>(n));
            long long sum = 0, g = 0;
            for (int i = 0; i + 1 < n; ++i) {
                a[static_cast<std::size_t>(i)] = uniform(-max_abs, max_abs);
                sum += a[static_cast<std::size_t>(i)];
            }
            a[static_cast<std::size_t>(n - 1)] = -sum;
            if (std::abs(a[static_cast<std::size_t>(n - 1)]) > max_abs) continue;
            for (long long v : a) g = std::gcd(g, v);
            if (g == 1) return a;
        }
    }
};

// Every weight vector with the given length, entries in [-max_abs, max_abs],
// sum zero, gcd one and sum |a_i| <= max_abs_sum.
inline std::vector<std::vector<long long>> weight_box(int n, int max_abs, long long max_abs_sum) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> a(static_cast<std::size_t>(n));
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 2 * max_abs + 1;
    for (long long code = 0; code < total; ++code) {
        long long c = code, sum = 0, abs_sum = 0, g = 0;
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = (c % (2 * max_abs + 1)) - max_abs;
            c /= 2 * max_abs + 1;
            sum += a[static_cast<std::size_t>(i)];
            abs_sum += std::llabs(a[static_cast<std::size_t>(i)]);
            g = std::gcd(g, a[static_cast<std::size_t>(i)]);
        }
        if (sum == 0 && g == 1 && abs_sum <= max_abs_sum) out.push_back(a);
    }
    return out;
}

} // namespace testutil
