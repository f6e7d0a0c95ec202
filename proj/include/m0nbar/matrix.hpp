#pragma once

#include <utility>
#include <vector>

#include "m0nbar/polynomial.hpp"

namespace m0nbar {

struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial> entries; // row-major, rows*cols

    PolyMatrix() = default;
    PolyMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    Polynomial& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Polynomial& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    static PolyMatrix identity(int n) {
        PolyMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

// Fraction-free Bareiss elimination with row pivoting. Every division along
// the way is exact in ZZ[x], so the result is the determinant on the nose.
inline Polynomial determinant(const PolyMatrix& matrix) {
    if (matrix.rows != matrix.cols) throw non_square();
    int n = matrix.rows;
    if (n == 0) return 1;

    PolyMatrix m = matrix;
    int sign = 1;
    Polynomial prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, k).is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = exact_divide(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = Polynomial{};
        }
        prev = m.at(k, k);
    }
    Polynomial det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

} // namespace m0nbar
