#pragma once

// Hypertrees on {1..n}: validation of the defining axioms, irreducibility,
// the determinant construction of the divisor polynomial, enumeration up to
// relabeling, automorphism groups and the bipyramid family.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "m0nbar/matrix.hpp"
#include "m0nbar/polynomial.hpp"

namespace m0nbar {

struct Hypertree {
    int n = 0;
    std::vector<std::vector<int>> blocks; // each block sorted ascending

    Hypertree() = default;
    Hypertree(int n_, std::vector<std::vector<int>> blocks_) : n(n_), blocks(std::move(blocks_)) {
        if (n < 1 || n > 62) throw invalid_hypertree("vertex count out of range");
        for (auto& block : blocks) {
            std::sort(block.begin(), block.end());
            if (std::adjacent_find(block.begin(), block.end()) != block.end())
                throw invalid_hypertree("block has a repeated vertex");
            if (!block.empty() && (block.front() < 1 || block.back() > n))
                throw invalid_hypertree("block vertex outside 1..n");
        }
    }

    bool operator==(const Hypertree&) const = default;
};

struct ValidationReport {
    bool block_sizes_ok = false;    // every |Gamma_j| >= 3
    bool coverage_ok = false;       // every vertex lies in >= 2 blocks
    bool convexity_ok = false;      // |union over S| - 2 >= sum (|Gamma_j| - 2) for all nonempty S
    bool normalization_ok = false;  // n - 2 == sum (|Gamma_j| - 2)
    std::vector<int> convexity_violation; // 1-based block indices of a violating S, if any

    bool valid() const { return block_sizes_ok && coverage_ok && convexity_ok && normalization_ok; }
};

namespace detail {

inline std::uint64_t block_mask(const std::vector<int>& block) {
    std::uint64_t m = 0;
    for (int v : block) m |= std::uint64_t{1} << (v - 1);
    return m;
}

} // namespace detail

inline ValidationReport validate(const Hypertree& h) {
    ValidationReport report;
    const int d = static_cast<int>(h.blocks.size());
    if (d > 24) throw invalid_hypertree("too many blocks for the convexity sweep");

    report.block_sizes_ok = std::all_of(h.blocks.begin(), h.blocks.end(),
                                        [](const auto& b) { return b.size() >= 3; });

    std::vector<int> degree(static_cast<std::size_t>(h.n) + 1, 0);
    int excess_sum = 0;
    for (const auto& block : h.blocks) {
        excess_sum += static_cast<int>(block.size()) - 2;
        for (int v : block) ++degree[static_cast<std::size_t>(v)];
    }
    report.coverage_ok = true;
    for (int v = 1; v <= h.n; ++v)
        if (degree[static_cast<std::size_t>(v)] < 2) report.coverage_ok = false;
    report.normalization_ok = (excess_sum == h.n - 2);

    std::vector<std::uint64_t> masks;
    masks.reserve(h.blocks.size());
    for (const auto& block : h.blocks) masks.push_back(detail::block_mask(block));

    report.convexity_ok = true;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << d); ++s) {
        std::uint64_t u = 0;
        int excess = 0;
        for (int j = 0; j < d; ++j)
            if ((s >> j) & 1u) {
                u |= masks[static_cast<std::size_t>(j)];
                excess += static_cast<int>(h.blocks[static_cast<std::size_t>(j)].size()) - 2;
            }
        if (__builtin_popcountll(u) - 2 < excess) {
            report.convexity_ok = false;
            for (int j = 0; j < d; ++j)
                if ((s >> j) & 1u) report.convexity_violation.push_back(j + 1);
            break;
        }
    }
    return report;
}

// Strict convexity for every proper sub-collection 1 < |S| < d.
inline bool is_irreducible(const Hypertree& h) {
    if (!validate(h).valid()) throw invalid_hypertree();
    const int d = static_cast<int>(h.blocks.size());
    std::vector<std::uint64_t> masks;
    for (const auto& block : h.blocks) masks.push_back(detail::block_mask(block));
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << d); ++s) {
        int size = __builtin_popcount(s);
        if (size <= 1 || size >= d) continue;
        std::uint64_t u = 0;
        int excess = 0;
        for (int j = 0; j < d; ++j)
            if ((s >> j) & 1u) {
                u |= masks[static_cast<std::size_t>(j)];
                excess += static_cast<int>(h.blocks[static_cast<std::size_t>(j)].size()) - 2;
            }
        if (__builtin_popcountll(u) - 2 <= excess) return false;
    }
    return true;
}

struct TripleSystem {
    std::vector<std::array<int, 3>> triples; // n - 2 of them, each sorted
};

// For each block {a1 < a2 < ... < ak} emit the triples {a1, a2, aj}, j >= 3.
inline TripleSystem triple_system(const Hypertree& h) {
    if (!validate(h).valid()) throw invalid_hypertree();
    TripleSystem ts;
    for (const auto& block : h.blocks)
        for (std::size_t j = 2; j < block.size(); ++j)
            ts.triples.push_back({block[0], block[1], block[j]});
    return ts;
}

// Row alpha for G_alpha = {i,j,k}: entry (x_j - x_k) in column i,
// (x_k - x_i) in column j, (x_i - x_j) in column k, zero elsewhere.
inline PolyMatrix matrix_A(const TripleSystem& ts, int n) {
    PolyMatrix a(static_cast<int>(ts.triples.size()), n);
    const auto x = [](int v) { return Polynomial::variable(v); };
    for (std::size_t alpha = 0; alpha < ts.triples.size(); ++alpha) {
        const auto [i, j, k] = ts.triples[alpha];
        a.at(static_cast<int>(alpha), i - 1) = x(j) - x(k);
        a.at(static_cast<int>(alpha), j - 1) = x(k) - x(i);
        a.at(static_cast<int>(alpha), k - 1) = x(i) - x(j);
    }
    return a;
}

// Deletes the pivot row (1-based) and every column where it is nonzero.
inline PolyMatrix matrix_B(const PolyMatrix& a, int pivot_row) {
    if (pivot_row < 1 || pivot_row > a.rows) throw bad_pivot("pivot row out of range");
    std::vector<int> dropped_cols;
    for (int c = 0; c < a.cols; ++c)
        if (!a.at(pivot_row - 1, c).is_zero()) dropped_cols.push_back(c);
    if (dropped_cols.size() != 3) throw bad_pivot();

    PolyMatrix b(a.rows - 1, a.cols - 3);
    int bi = 0;
    for (int r = 0; r < a.rows; ++r) {
        if (r == pivot_row - 1) continue;
        int bj = 0;
        for (int c = 0; c < a.cols; ++c) {
            if (std::binary_search(dropped_cols.begin(), dropped_cols.end(), c)) continue;
            b.at(bi, bj++) = a.at(r, c);
        }
        ++bi;
    }
    return b;
}

// det B divided by prod_i (x_{a_{i1}} - x_{a_{i2}})^{k_i - 3}, primitive
// normalized. Degree comes out as d - 1 where d is the block count.
inline Polynomial divisor_polynomial(const Hypertree& h, int pivot_row) {
    PolyMatrix a = matrix_A(triple_system(h), h.n);
    Polynomial det = determinant(matrix_B(a, pivot_row));
    if (det.is_zero()) throw zero_polynomial("hypertree determinant vanished");
    Polynomial denom = 1;
    for (const auto& block : h.blocks) {
        int e = static_cast<int>(block.size()) - 3;
        if (e > 0) denom *= pow(Polynomial::variable(block[0]) - Polynomial::variable(block[1]), e);
    }
    return primitive_normalize(exact_divide(det, denom));
}

inline Polynomial divisor_polynomial(const Hypertree& h) { return divisor_polynomial(h, 1); }

inline Hypertree relabel(const Hypertree& h, const std::vector<int>& perm) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(h.blocks.size());
    for (const auto& block : h.blocks) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int v : block) image.push_back(perm.at(static_cast<std::size_t>(v) - 1));
        blocks.push_back(std::move(image));
    }
    return Hypertree(h.n, std::move(blocks));
}

namespace detail {

// Canonical labeling of a hypertree: the lexicographically least sorted
// block sequence over all relabelings. The search processes blocks greedily
// (always one whose partially-relabeled tuple is minimal, fresh vertices
// taking the next consecutive labels) which provably reaches the optimum,
// and branches only over ties. Complete runs that tie with the optimum are
// in bijection with the automorphism group, so the search also counts it.
class CanonicalSearch {
public:
    CanonicalSearch(int n, std::vector<std::vector<int>> blocks_zero_based)
        : n_(n), d_(static_cast<int>(blocks_zero_based.size())), blocks_(std::move(blocks_zero_based)),
          processed_(blocks_.size(), 0), new_label_(static_cast<std::size_t>(n), -1) {}

    void run() {
        current_.reserve(static_cast<std::size_t>(d_));
        dfs(0, true);
    }

    const std::vector<std::vector<int>>& best() const { return best_; }
    long long automorphism_count() const { return aut_count_; }

private:
    int n_, d_;
    std::vector<std::vector<int>> blocks_;
    std::vector<char> processed_;
    std::vector<int> new_label_;
    std::vector<int> assigned_; // old vertices in assignment order
    std::vector<std::vector<int>> current_;
    std::vector<std::vector<int>> best_;
    bool have_best_ = false;
    long long aut_count_ = 0;

    std::vector<int> materialize(int bi) const {
        std::vector<int> tuple;
        tuple.reserve(blocks_[static_cast<std::size_t>(bi)].size());
        int fresh = 0;
        for (int v : blocks_[static_cast<std::size_t>(bi)]) {
            int lab = new_label_[static_cast<std::size_t>(v)];
            if (lab >= 0) tuple.push_back(lab);
            else ++fresh;
        }
        std::sort(tuple.begin(), tuple.end());
        int next = static_cast<int>(assigned_.size());
        for (int q = 0; q < fresh; ++q) tuple.push_back(next + q);
        return tuple;
    }

    void dfs(int depth, bool equal_prefix) {
        if (depth == d_) {
            if (!have_best_ || current_ < best_) {
                best_ = current_;
                have_best_ = true;
                aut_count_ = 1;
            } else if (current_ == best_) {
                ++aut_count_;
            }
            return;
        }

        std::vector<int> min_tuple;
        std::vector<int> candidates;
        for (int bi = 0; bi < d_; ++bi) {
            if (processed_[static_cast<std::size_t>(bi)]) continue;
            auto tuple = materialize(bi);
            if (candidates.empty() || tuple < min_tuple) {
                min_tuple = std::move(tuple);
                candidates.assign(1, bi);
            } else if (tuple == min_tuple) {
                candidates.push_back(bi);
            }
        }

        bool next_equal = false;
        if (have_best_ && equal_prefix) {
            if (min_tuple > best_[static_cast<std::size_t>(depth)]) return;
            next_equal = (min_tuple == best_[static_cast<std::size_t>(depth)]);
        }

        for (int bi : candidates) {
            std::vector<int> fresh;
            for (int v : blocks_[static_cast<std::size_t>(bi)])
                if (new_label_[static_cast<std::size_t>(v)] < 0) fresh.push_back(v);
            std::sort(fresh.begin(), fresh.end());
            do {
                int base = static_cast<int>(assigned_.size());
                for (std::size_t q = 0; q < fresh.size(); ++q) {
                    new_label_[static_cast<std::size_t>(fresh[q])] = base + static_cast<int>(q);
                    assigned_.push_back(fresh[q]);
                }
                processed_[static_cast<std::size_t>(bi)] = 1;
                current_.push_back(min_tuple);
                dfs(depth + 1, next_equal);
                current_.pop_back();
                processed_[static_cast<std::size_t>(bi)] = 0;
                for (std::size_t q = 0; q < fresh.size(); ++q) {
                    new_label_[static_cast<std::size_t>(fresh[q])] = -1;
                    assigned_.pop_back();
                }
            } while (std::next_permutation(fresh.begin(), fresh.end()));
        }
    }
};

inline std::vector<std::vector<int>> blocks_zero_based(const Hypertree& h) {
    std::vector<std::vector<int>> out;
    out.reserve(h.blocks.size());
    for (const auto& block : h.blocks) {
        std::vector<int> b;
        b.reserve(block.size());
        for (int v : block) b.push_back(v - 1);
        out.push_back(std::move(b));
    }
    return out;
}

inline Hypertree from_zero_based(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> shifted;
    shifted.reserve(blocks.size());
    for (const auto& block : blocks) {
        std::vector<int> b;
        b.reserve(block.size());
        for (int v : block) b.push_back(v + 1);
        shifted.push_back(std::move(b));
    }
    return Hypertree(n, std::move(shifted));
}

inline long long count_automorphisms_brute_force(const Hypertree& h) {
    std::vector<std::uint64_t> base;
    for (const auto& block : h.blocks) base.push_back(block_mask(block));
    std::sort(base.begin(), base.end());

    std::vector<int> perm(static_cast<std::size_t>(h.n));
    for (int i = 0; i < h.n; ++i) perm[static_cast<std::size_t>(i)] = i;
    long long count = 0;
    do {
        std::vector<std::uint64_t> image;
        image.reserve(base.size());
        for (const auto& block : h.blocks) {
            std::uint64_t m = 0;
            for (int v : block) m |= std::uint64_t{1} << perm[static_cast<std::size_t>(v - 1)];
            image.push_back(m);
        }
        std::sort(image.begin(), image.end());
        if (image == base) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Backtracking over vertex images: candidates must match the incidence
// signature, and every fully-mapped block must land on a block.
class AutomorphismCounter {
public:
    explicit AutomorphismCounter(const Hypertree& h) : n_(h.n) {
        for (const auto& block : h.blocks) masks_.push_back(block_mask(block));
        mask_set_ = {masks_.begin(), masks_.end()};
        signatures_.resize(static_cast<std::size_t>(n_));
        for (int v = 1; v <= n_; ++v) {
            std::vector<int> sig;
            for (const auto& block : h.blocks)
                if (std::binary_search(block.begin(), block.end(), v)) sig.push_back(static_cast<int>(block.size()));
            std::sort(sig.begin(), sig.end());
            signatures_[static_cast<std::size_t>(v - 1)] = std::move(sig);
        }
        image_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), 0);
    }

    long long count() {
        count_ = 0;
        extend(0);
        return count_;
    }

private:
    int n_;
    std::vector<std::uint64_t> masks_;
    std::set<std::uint64_t> mask_set_;
    std::vector<std::vector<int>> signatures_;
    std::vector<int> image_;
    std::vector<char> used_;
    long long count_ = 0;

    bool blocks_consistent(int assigned_upto) const {
        std::uint64_t assigned_mask = 0;
        for (int v = 0; v <= assigned_upto; ++v) assigned_mask |= std::uint64_t{1} << v;
        for (std::uint64_t m : masks_) {
            if ((m & ~assigned_mask) != 0) continue; // not fully mapped yet
            std::uint64_t im = 0;
            for (int v = 0; v <= assigned_upto; ++v)
                if ((m >> v) & 1u) im |= std::uint64_t{1} << image_[static_cast<std::size_t>(v)];
            if (!mask_set_.count(im)) return false;
        }
        return true;
    }

    void extend(int v) {
        if (v == n_) {
            ++count_;
            return;
        }
        for (int w = 0; w < n_; ++w) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (signatures_[static_cast<std::size_t>(v)] != signatures_[static_cast<std::size_t>(w)]) continue;
            image_[static_cast<std::size_t>(v)] = w;
            used_[static_cast<std::size_t>(w)] = 1;
            if (blocks_consistent(v)) extend(v + 1);
            used_[static_cast<std::size_t>(w)] = 0;
            image_[static_cast<std::size_t>(v)] = -1;
        }
    }
};

} // namespace detail

// Canonically labeled representative of the relabeling class of h, with
// blocks listed in sorted order.
inline Hypertree canonical_form(const Hypertree& h) {
    detail::CanonicalSearch search(h.n, detail::blocks_zero_based(h));
    search.run();
    return detail::from_zero_based(h.n, search.best());
}

// Order of { sigma in S_n : sigma(Gamma) = Gamma as a set of blocks }.
// Plain sweep over S_n up to n = 8, pruned backtracking beyond.
inline long long automorphism_group_size(const Hypertree& h) {
    if (!validate(h).valid()) throw invalid_hypertree();
    if (h.n <= 8) return detail::count_automorphisms_brute_force(h);
    return detail::AutomorphismCounter(h).count();
}

// All irreducible hypertrees on {1..n} up to relabeling, canonically labeled
// and deterministically ordered. A backtracking search builds the block list
// in lexicographic order, introducing new vertices consecutively; strict
// convexity, the normalization budget and a coverage-capacity bound prune;
// survivors are deduplicated by canonical form.
inline std::vector<Hypertree> enumerate_irreducible(int n) {
    if (n < 1) throw unsupported_n("n must be positive");
    if (n > 10) throw unsupported_n("irreducible hypertree enumeration is supported for n <= 10");

    std::set<std::vector<std::vector<int>>> canonical;
    if (n >= 3) {
        struct Search {
            int n;
            std::set<std::vector<std::vector<int>>>& out;
            std::vector<std::vector<int>> chosen;   // 0-based blocks
            std::vector<std::uint64_t> masks;
            std::vector<int> degree;
            int used = 0;      // vertices introduced so far (labels 0..used-1)
            int remaining = 0; // normalization budget n - 2 minus spent

            Search(int n_, std::set<std::vector<std::vector<int>>>& out_) : n(n_), out(out_) {
                degree.assign(static_cast<std::size_t>(n), 0);
                remaining = n - 2;
            }

            bool admissible(const std::vector<int>& block, std::uint64_t mask) const {
                int remaining_after = remaining - (static_cast<int>(block.size()) - 2);
                const int d = static_cast<int>(chosen.size());
                for (std::uint32_t s = 0; s < (std::uint32_t{1} << d); ++s) {
                    std::uint64_t u = mask;
                    int excess = static_cast<int>(block.size()) - 2;
                    int members = 1;
                    for (int j = 0; j < d; ++j)
                        if ((s >> j) & 1u) {
                            u |= masks[static_cast<std::size_t>(j)];
                            excess += static_cast<int>(chosen[static_cast<std::size_t>(j)].size()) - 2;
                            ++members;
                        }
                    if (members == 1) continue;
                    int slack = __builtin_popcountll(u) - 2 - excess;
                    bool is_entire_final_tree = (members == d + 1 && remaining_after == 0);
                    if (is_entire_final_tree ? slack < 0 : slack <= 0) return false;
                }
                return true;
            }

            bool coverage_feasible(int used_after, int remaining_after) const {
                int deficit = 2 * (n - used_after);
                for (int v = 0; v < used_after; ++v)
                    deficit += std::max(0, 2 - degree[static_cast<std::size_t>(v)]);
                return deficit <= 3 * remaining_after;
            }

            void leaf() {
                if (used != n) return;
                for (int v = 0; v < n; ++v)
                    if (degree[static_cast<std::size_t>(v)] < 2) return;
                detail::CanonicalSearch canon(n, chosen);
                canon.run();
                out.insert(canon.best());
            }

            void expand() {
                if (remaining == 0) {
                    leaf();
                    return;
                }
                int max_size = std::min(n, remaining + 2);
                for (int size = 3; size <= max_size; ++size) {
                    int max_fresh = std::min(size, n - used);
                    for (int fresh = 0; fresh <= max_fresh; ++fresh) {
                        std::vector<int> old_part;
                        choose_old(size - fresh, fresh, 0, old_part);
                    }
                }
            }

            void choose_old(int want, int fresh, int from, std::vector<int>& old_part) {
                if (static_cast<int>(old_part.size()) == want) {
                    try_block(old_part, fresh);
                    return;
                }
                for (int v = from; v < used; ++v) {
                    old_part.push_back(v);
                    choose_old(want, fresh, v + 1, old_part);
                    old_part.pop_back();
                }
            }

            void try_block(const std::vector<int>& old_part, int fresh) {
                std::vector<int> block = old_part;
                for (int q = 0; q < fresh; ++q) block.push_back(used + q);
                if (!chosen.empty() && !(chosen.back() < block)) return;

                std::uint64_t mask = 0;
                for (int v : block) mask |= std::uint64_t{1} << v;
                for (std::uint64_t m : masks)
                    if (__builtin_popcountll(m & mask) > 1) return;

                int spent = static_cast<int>(block.size()) - 2;
                if (spent > remaining) return;
                if (!admissible(block, mask)) return;

                for (int v : block) ++degree[static_cast<std::size_t>(v)];
                chosen.push_back(block);
                masks.push_back(mask);
                used += fresh;
                remaining -= spent;

                if (coverage_feasible(used, remaining)) expand();

                remaining += spent;
                used -= fresh;
                masks.pop_back();
                chosen.pop_back();
                for (int v : block) --degree[static_cast<std::size_t>(v)];
            }
        };

        Search search(n, canonical);
        search.expand();
    }

    std::vector<Hypertree> out;
    out.reserve(canonical.size());
    for (const auto& blocks : canonical) out.push_back(detail::from_zero_based(n, blocks));
    return out;
}

// Hypertree of the black triangles of a checkerboard-colored bipyramid over
// a 2k-gon: equator positions alternate the vertex classes {1..k} and
// {k+1..2k}, the poles are 2k+1 and 2k+2, and consecutive triangles use
// opposite poles.
inline Hypertree bipyramid(int k) {
    if (k < 2) throw bad_k("bipyramid requires k >= 2");
    const int n = 2 * k + 2;
    const int pole_north = 2 * k + 1;
    const int pole_south = 2 * k + 2;
    std::vector<int> equator(static_cast<std::size_t>(2 * k));
    for (int j = 1; j <= k; ++j) {
        equator[static_cast<std::size_t>(2 * j - 2)] = j;
        equator[static_cast<std::size_t>(2 * j - 1)] = k + j;
    }
    std::vector<std::vector<int>> blocks;
    blocks.reserve(static_cast<std::size_t>(2 * k));
    for (int i = 1; i <= 2 * k; ++i) {
        int pole = (i % 2 == 0) ? pole_north : pole_south;
        blocks.push_back({pole, equator[static_cast<std::size_t>(i - 1)], equator[static_cast<std::size_t>(i % (2 * k))]});
    }
    return Hypertree(n, std::move(blocks));
}

} // namespace m0nbar
