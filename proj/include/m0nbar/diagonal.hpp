#pragma once

// Multiplicity of a polynomial's vanishing locus along a partial diagonal
// at a general point of the diagonal.
//
// The general point is realized symbolically: x_i is shifted by the single
// fresh parameter t for i in J and by its own parameter b_i for i outside J,
// and the multiplicity is the least total x-degree carried by a term of the
// shifted polynomial whose coefficient (a polynomial in t and the b_i) is
// nonzero. No sampling is involved, so the answer is exact.
//
// The shifted polynomial is never materialized: its degree-m slice is
// accumulated for m = 0, 1, ... until a nonzero slice appears. Slices are
// keyed by nibble-packed exponent vectors when everything fits in 128 bits,
// with a generic sparse-monomial path as fallback.

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "m0nbar/polynomial.hpp"

namespace m0nbar {

struct PartialDiagonal {
    int n = 0;
    std::vector<int> members; // sorted subset of 1..n, size >= 2

    PartialDiagonal(int n_, std::vector<int> J) : n(n_), members(std::move(J)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() < 2) throw bad_diagonal();
        if (n < 1 || members.front() < 1 || members.back() > n)
            throw bad_diagonal("diagonal members must lie in 1..n");
    }

    bool contains(int i) const { return std::binary_search(members.begin(), members.end(), i); }
};

namespace detail {

inline long long binomial_small(int n, int k) {
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

struct PackedKey {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const PackedKey&) const = default;
};

struct PackedKeyHash {
    std::size_t operator()(const PackedKey& k) const {
        std::uint64_t x = k.lo * 0x9e3779b97f4a7c15ULL ^ (k.hi + 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 31;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

// slot layout: x_i -> i-1, t -> n, b_i -> n+i; 4 bits per exponent
inline void packed_add(PackedKey& key, int slot, int value) {
    if (slot < 16) key.lo += static_cast<std::uint64_t>(value) << (4 * slot);
    else key.hi += static_cast<std::uint64_t>(value) << (4 * (slot - 16));
}

// Shifts x_i -> x_i + s_i term by term: picking exponent j_i <= e_i of x_i
// leaves a factor s_i^{e_i - j_i} with coefficient C(e_i, j_i). The shift
// s_i is a parameter variable in symbolic mode and an integer in sampled
// mode; either way distinct source terms can collide on a slice key and
// cancel, which is exactly what the general-point evaluation has to detect.
class ShiftedDegreeScan {
public:
    ShiftedDegreeScan(const Polynomial& f, int n, bool symbolic,
                      std::vector<int> shift_var, std::vector<Integer> shift_val)
        : f_(f), n_(n), symbolic_(symbolic), shift_var_(std::move(shift_var)), shift_val_(std::move(shift_val)) {}

    int minimal_degree() {
        const int deg = f_.degree();
        const bool packable = symbolic_ && 2 * n_ + 1 <= 32 && deg <= 15;
        for (int m = 0;; ++m) {
            if (m >= deg) return deg; // the top slice is f's own leading forms
            bool nonzero = packable ? packed_slice_nonzero(m) : generic_slice_nonzero(m);
            if (nonzero) return m;
        }
    }

private:
    const Polynomial& f_;
    int n_;
    bool symbolic_;
    std::vector<int> shift_var_;     // indexed by variable 1..n, symbolic mode
    std::vector<Integer> shift_val_; // indexed by variable 1..n, sampled mode

    // --- packed path -------------------------------------------------------

    std::unordered_map<PackedKey, Integer, PackedKeyHash> packed_slice_;
    const std::vector<Monomial::Entry>* term_ = nullptr;

    bool packed_slice_nonzero(int m) {
        packed_slice_.clear();
        packed_slice_.reserve(f_.term_count() * 4);
        for (const auto& [mono, coeff] : f_.terms()) {
            term_ = &mono.entries();
            packed_emit(0, m, 1, PackedKey{}, coeff);
        }
        for (const auto& [key, coeff] : packed_slice_)
            if (coeff != 0) return true;
        return false;
    }

    void packed_emit(std::size_t idx, int remaining, long long multiplier, PackedKey key, const Integer& coeff) {
        if (idx == term_->size()) {
            if (remaining == 0) {
                auto [it, inserted] = packed_slice_.try_emplace(key, 0);
                it->second += coeff * multiplier;
            }
            return;
        }
        const auto [v, e] = (*term_)[idx];
        const int max_keep = std::min(e, remaining);
        const int shift_slot = shift_var_[static_cast<std::size_t>(v)] == t_var ? n_ : n_ + v;
        for (int j = 0; j <= max_keep; ++j) {
            PackedKey next = key;
            if (j > 0) packed_add(next, v - 1, j);
            if (e - j > 0) packed_add(next, shift_slot, e - j);
            packed_emit(idx + 1, remaining - j, multiplier * binomial_small(e, j), next, coeff);
        }
    }

    // --- generic fallback ---------------------------------------------------

    std::map<Monomial, Integer, MonomialGreater> generic_slice_;

    bool generic_slice_nonzero(int m) {
        generic_slice_.clear();
        for (const auto& [mono, coeff] : f_.terms()) {
            term_ = &mono.entries();
            generic_emit(0, m, coeff, {});
        }
        for (const auto& [mono, coeff] : generic_slice_)
            if (coeff != 0) return true;
        return false;
    }

    void generic_emit(std::size_t idx, int remaining, Integer coeff, std::vector<Monomial::Entry> picked) {
        if (idx == term_->size()) {
            if (remaining == 0) {
                auto [it, inserted] = generic_slice_.emplace(Monomial::make(std::move(picked)), coeff);
                if (!inserted) it->second += coeff;
            }
            return;
        }
        const auto [v, e] = (*term_)[idx];
        const int max_keep = std::min(e, remaining);
        for (int j = 0; j <= max_keep; ++j) {
            Integer c = coeff * binomial_small(e, j);
            auto next = picked;
            if (j > 0) next.emplace_back(v, j);
            const int dropped = e - j;
            if (dropped > 0) {
                if (symbolic_) next.emplace_back(shift_var_[static_cast<std::size_t>(v)], dropped);
                else {
                    const Integer& s = shift_val_[static_cast<std::size_t>(v)];
                    for (int q = 0; q < dropped; ++q) c *= s;
                }
            }
            if (c != 0) generic_emit(idx + 1, remaining - j, std::move(c), std::move(next));
        }
    }
};

inline void check_geometry_variables(const Polynomial& f, int n) {
    for (int v : f.variables())
        if (v < 1 || v > n) throw error("polynomial has variables outside x1..x" + std::to_string(n));
}

} // namespace detail

inline int multiplicity_along(const Polynomial& f, const PartialDiagonal& d) {
    if (f.is_zero()) throw zero_polynomial("multiplicity of the zero polynomial");
    detail::check_geometry_variables(f, d.n);
    std::vector<int> shift_var(static_cast<std::size_t>(d.n) + 1);
    for (int i = 1; i <= d.n; ++i) shift_var[static_cast<std::size_t>(i)] = d.contains(i) ? t_var : b_var(i);
    detail::ShiftedDegreeScan scan(f, d.n, /*symbolic=*/true, shift_var, {});
    return scan.minimal_degree();
}

// Probabilistic variant: evaluates t and the b_i at distinct random 63-bit
// integers and accepts once two independent samples agree. Cheaper on large
// inputs but only correct with high probability; excluded from verification.
inline int multiplicity_along_sampled(const Polynomial& f, const PartialDiagonal& d, std::uint64_t seed = 0) {
    if (f.is_zero()) throw zero_polynomial("multiplicity of the zero polynomial");
    detail::check_geometry_variables(f, d.n);
    std::mt19937_64 rng(seed ? seed : 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<std::int64_t> dist(1, std::int64_t{1} << 62);

    const auto sample = [&]() {
        std::vector<Integer> shift(static_cast<std::size_t>(d.n) + 1);
        std::set<std::int64_t> used;
        const auto fresh = [&]() {
            std::int64_t v;
            do { v = dist(rng); } while (!used.insert(v).second);
            return Integer(v);
        };
        const Integer t_value = fresh();
        for (int i = 1; i <= d.n; ++i)
            shift[static_cast<std::size_t>(i)] = d.contains(i) ? t_value : fresh();
        detail::ShiftedDegreeScan scan(f, d.n, /*symbolic=*/false, {}, std::move(shift));
        return scan.minimal_degree();
    };

    int previous = sample();
    for (int round = 0; round < 64; ++round) {
        int next = sample();
        if (next == previous) return next;
        previous = next;
    }
    return previous;
}

// True iff f is homogeneous and invariant under the simultaneous translation
// x_i -> x_i + t of all n coordinates: the shape every polynomial specifying
// a divisor on the moduli space must have.
inline bool is_difference_translation_invariant(const Polynomial& f, int n) {
    if (f.is_zero()) throw zero_polynomial();
    if (!f.is_homogeneous()) return false;
    std::map<int, Polynomial> shift;
    const Polynomial t = Polynomial::variable(t_var);
    for (int i = 1; i <= n; ++i) shift.emplace(i, Polynomial::variable(i) + t);
    return substitute(f, shift) == f;
}

} // namespace m0nbar
