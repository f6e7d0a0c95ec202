#pragma once

// Divisor classes on the moduli space of stable rational curves with n
// marked points, written in a Kapranov basis: the hyperplane pullback H
// plus the boundary generators E_I = delta_{I u {r}} for 1 <= |I| <= n-4,
// where r is the basis index.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "m0nbar/diagonal.hpp"
#include "m0nbar/polynomial.hpp"

namespace m0nbar {

using IndexSet = std::vector<int>; // sorted, deduplicated

inline IndexSet make_index_set(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

struct SizeLexLess {
    bool operator()(const IndexSet& a, const IndexSet& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

class DivisorClass {
public:
    using CoeffMap = std::map<IndexSet, long long, SizeLexLess>;

    DivisorClass(int n, int basis_index, long long h_coeff, CoeffMap e_coeffs)
        : n_(n), basis_(basis_index), h_(h_coeff), coeffs_(std::move(e_coeffs)) {
        if (n_ < 4) throw bad_index("divisor classes need at least 4 markings");
        if (basis_ < 1 || basis_ > n_) throw bad_index();
        for (auto it = coeffs_.begin(); it != coeffs_.end();) {
            if (it->second == 0) { it = coeffs_.erase(it); continue; }
            const IndexSet& I = it->first;
            if (I.empty() || static_cast<int>(I.size()) > n_ - 4)
                throw bad_index("E-coefficient index set has size outside 1..n-4");
            for (std::size_t k = 0; k < I.size(); ++k) {
                if (I[k] < 1 || I[k] > n_ || I[k] == basis_ || (k > 0 && I[k] <= I[k - 1]))
                    throw bad_index("E-coefficient index set must be a sorted subset of {1..n} minus the basis index");
            }
            ++it;
        }
    }

    int n() const { return n_; }
    int basis_index() const { return basis_; }
    long long h_coeff() const { return h_; }
    const CoeffMap& e_coeffs() const { return coeffs_; }

    long long coefficient(const IndexSet& I) const {
        auto it = coeffs_.find(I);
        return it == coeffs_.end() ? 0 : it->second;
    }

    bool operator==(const DivisorClass&) const = default;

private:
    int n_;
    int basis_;
    long long h_;
    CoeffMap coeffs_;
};

inline bool classes_equal(const DivisorClass& a, const DivisorClass& b) {
    if (a.n() != b.n() || a.basis_index() != b.basis_index()) throw basis_mismatch();
    return a == b;
}

enum class MultiplicityMode { exact, sampled };

// Class of the pullback of the divisor V(f) to the moduli space with one
// extra marking, in the (n+1)-st Kapranov basis: the H-coefficient is
// deg(f) and the E_I coefficient is the multiplicity of f along the partial
// diagonal indexed by the complement of I.
inline DivisorClass pullback_class_from_polynomial(const Polynomial& f, int n,
                                                   MultiplicityMode mode = MultiplicityMode::exact,
                                                   std::uint64_t seed = 0) {
    if (f.is_zero()) throw zero_polynomial("cannot take the class of the zero polynomial");
    if (n < 4) throw bad_index("need n >= 4 markings");
    if (n > 26) throw bad_index("too many markings to materialize the class");
    detail::check_geometry_variables(f, n);
    if (!is_difference_translation_invariant(f, n)) throw not_translation_invariant();

    DivisorClass::CoeffMap coeffs;
    std::vector<int> complement;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 1 || size > n - 3) continue;
        IndexSet I;
        complement.clear();
        for (int i = 1; i <= n; ++i)
            ((mask >> (i - 1)) & 1u ? I : complement).push_back(i);
        PartialDiagonal diag(n, complement);
        int m = mode == MultiplicityMode::exact ? multiplicity_along(f, diag)
                                                : multiplicity_along_sampled(f, diag, seed + mask);
        if (m != 0) coeffs.emplace(std::move(I), m);
    }
    return DivisorClass(n + 1, n + 1, f.degree(), std::move(coeffs));
}

// Converts the class of a pullback on n+1 markings (in the (n+1)-st basis)
// into the class of the divisor itself on n markings in the r-th basis:
// H picks up the coefficient of E_{r} and each key I containing r descends
// to I minus r.
inline DivisorClass push_down(const DivisorClass& c, int r) {
    int n = c.n() - 1;
    if (c.basis_index() != c.n())
        throw bad_index("push_down expects a pullback class in the last Kapranov basis");
    if (r < 1 || r > n) throw bad_index();

    long long h = c.coefficient(IndexSet{r});
    DivisorClass::CoeffMap coeffs;
    for (const auto& [I, m] : c.e_coeffs()) {
        if (I.size() < 2 || !std::binary_search(I.begin(), I.end(), r)) continue;
        IndexSet reduced;
        reduced.reserve(I.size() - 1);
        for (int i : I)
            if (i != r) reduced.push_back(i);
        coeffs.emplace(std::move(reduced), m);
    }
    return DivisorClass(n, r, h, std::move(coeffs));
}

inline DivisorClass class_from_polynomial(const Polynomial& f, int n, int r,
                                          MultiplicityMode mode = MultiplicityMode::exact,
                                          std::uint64_t seed = 0) {
    return push_down(pullback_class_from_polynomial(f, n, mode, seed), r);
}

} // namespace m0nbar
