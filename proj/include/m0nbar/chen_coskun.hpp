#pragma once

// Chen-Coskun divisors: for a weight vector a = (a_1..a_n) with sum zero
// and gcd one, the divisor Lambda_a lives on the moduli space with n+2
// markings, the last two of which are special. A defining polynomial, the
// closed-form class of its pullback, the class in a chosen Kapranov basis
// and the boundary-restriction identity all live here.

#include <cstdlib>
#include <numeric>
#include <vector>

#include "m0nbar/divisor_class.hpp"
#include "m0nbar/polynomial.hpp"

namespace m0nbar {

class WeightVector {
public:
    explicit WeightVector(std::vector<long long> a) : a_(std::move(a)) {
        if (a_.size() < 2) throw invalid_weights("need at least two weights");
        long long sum = 0, g = 0;
        for (long long v : a_) {
            sum += v;
            g = std::gcd(g, v);
        }
        if (sum != 0) throw invalid_weights("weights must sum to zero");
        if (g != 1) throw invalid_weights("weights must have gcd one");
    }

    int n() const { return static_cast<int>(a_.size()); }
    const std::vector<long long>& weights() const { return a_; }
    long long operator[](int i) const { return a_[static_cast<std::size_t>(i - 1)]; } // 1-based

    long long abs_sum() const {
        long long s = 0;
        for (long long v : a_) s += std::llabs(v);
        return s;
    }

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<long long> a_;
};

// The undivided numerator: the product of (x_{n+1} - x_i)^{|a_i|} over
// nonnegative weights times (x_{n+2} - x_i)^{|a_i|} over nonpositive ones,
// minus the same with the two special markings swapped.
inline Polynomial lambda_numerator(const WeightVector& w) {
    const int n = w.n();
    const Polynomial y = Polynomial::variable(n + 1);
    const Polynomial z = Polynomial::variable(n + 2);
    Polynomial first = 1, second = 1;
    for (int i = 1; i <= n; ++i) {
        const long long a = w[i];
        if (a == 0) continue;
        const Polynomial xi = Polynomial::variable(i);
        const int e = static_cast<int>(std::llabs(a));
        if (a > 0) {
            first *= pow(y - xi, e);
            second *= pow(z - xi, e);
        } else {
            first *= pow(z - xi, e);
            second *= pow(y - xi, e);
        }
    }
    return first - second;
}

// Defining polynomial of Lambda_a: the numerator divided (exactly once) by
// x_{n+1} - x_{n+2}, primitive normalized. Homogeneous of degree
// sum |a_i| - 1.
inline Polynomial lambda_polynomial(const WeightVector& w) {
    const int n = w.n();
    Polynomial divisor = Polynomial::variable(n + 1) - Polynomial::variable(n + 2);
    return primitive_normalize(exact_divide(lambda_numerator(w), divisor));
}

namespace detail {

// The closed-form multiplicity of the Lambda_a equation along the diagonal
// complementary to I, with I a subset of the n+2 markings. The formulas
// follow the three cases of how I meets the special pair {n+1, n+2};
// weights equal to zero make two of the generic nonvanishing arguments
// degenerate, which is where the clamp and the support test come from.
inline long long closed_form_coefficient(const WeightVector& w, std::uint32_t i_mask) {
    const int n = w.n();
    const bool has_y = (i_mask >> n) & 1u;
    const bool has_z = (i_mask >> (n + 1)) & 1u;

    long long pos_out = 0, neg_out = 0; // weight mass outside I
    bool support_meets_i = false;
    for (int i = 1; i <= n; ++i) {
        const long long a = w[i];
        if ((i_mask >> (i - 1)) & 1u) {
            if (a != 0) support_meets_i = true;
        } else {
            if (a > 0) pos_out += a;
            if (a < 0) neg_out += -a;
        }
    }

    if (has_y && has_z) return support_meets_i ? 0 : 1;
    if (!has_y && !has_z) return std::max(0LL, pos_out + neg_out - 1);
    return std::min(pos_out, neg_out);
}

} // namespace detail

// Class of the pullback of Lambda_a to the space with n+3 markings, in the
// (n+3)-rd Kapranov basis, straight from the closed formulas (no polynomial
// arithmetic involved).
inline DivisorClass pullback_class_closed_form(const WeightVector& w) {
    const int n = w.n();
    if (n < 3) throw invalid_weights("class formulas need at least three weights");
    if (n > 22) throw invalid_weights("too many weights to materialize the class");

    DivisorClass::CoeffMap coeffs;
    const int markings = n + 2;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << markings); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 1 || size > n - 1) continue;
        long long m = detail::closed_form_coefficient(w, mask);
        if (m == 0) continue;
        IndexSet I;
        for (int i = 1; i <= markings; ++i)
            if ((mask >> (i - 1)) & 1u) I.push_back(i);
        coeffs.emplace(std::move(I), m);
    }
    return DivisorClass(n + 3, n + 3, w.abs_sum() - 1, std::move(coeffs));
}

// Class of Lambda_a itself on the space with n+2 markings in the Kapranov
// basis of index r <= n, instantiated directly from the closed formulas,
// independently of push_down, so the two routes cross-check each other.
inline DivisorClass class_in_basis(const WeightVector& w, int r) {
    const int n = w.n();
    if (n < 3) throw invalid_weights("class formulas need at least three weights");
    if (n > 22) throw invalid_weights("too many weights to materialize the class");
    if (r < 1 || r > n) throw bad_index("Kapranov basis index must lie in 1..n");

    const int markings = n + 2;
    long long h = -1;
    for (int i = 1; i <= n; ++i)
        if (i != r) h += std::llabs(w[i]);

    DivisorClass::CoeffMap coeffs;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << markings); ++mask) {
        if ((mask >> (r - 1)) & 1u) continue;
        int size = __builtin_popcount(mask);
        if (size < 1 || size > n - 2) continue;
        long long m = detail::closed_form_coefficient(w, mask | (std::uint32_t{1} << (r - 1)));
        if (m == 0) continue;
        IndexSet I;
        for (int i = 1; i <= markings; ++i)
            if ((mask >> (i - 1)) & 1u) I.push_back(i);
        coeffs.emplace(std::move(I), m);
    }
    return DivisorClass(markings, r, h, std::move(coeffs));
}

// Verifies, at the polynomial level, that restricting Lambda_a to the
// boundary where the last two non-special markings collide gives
// Lambda_b for b = (a_1..a_{n-1}, a_n + a_{n+1}): merge the markings in the
// numerator, shift the special markings down, divide and compare.
inline bool restriction_check(const WeightVector& w) {
    const int len = w.n();
    if (len < 3) throw invalid_weights("restriction needs at least three weights");

    std::vector<long long> merged(w.weights().begin(), w.weights().end() - 2);
    merged.push_back(w[len - 1] + w[len]);
    long long g = 0;
    for (long long v : merged) g = std::gcd(g, v);
    if (g != 1) throw gcd_violation("merged weights must have gcd one");

    Polynomial numerator = lambda_numerator(w);
    numerator = substitute(numerator, {{len, Polynomial::variable(len - 1)}});
    numerator = substitute(numerator, {{len + 1, Polynomial::variable(len)},
                                       {len + 2, Polynomial::variable(len + 1)}});
    Polynomial restricted = primitive_normalize(
        exact_divide(numerator, Polynomial::variable(len) - Polynomial::variable(len + 1)));

    return restricted == lambda_polynomial(WeightVector(std::move(merged)));
}

} // namespace m0nbar
