#pragma once

// Resultants straight from the definition: the determinant of the Sylvester
// matrix by fraction-exact Gaussian elimination.

#include <utility>
#include <vector>

#include "bouillabaisse/polynomial.hpp"

namespace oracle {

inline bouillabaisse::Rational determinant(std::vector<std::vector<bouillabaisse::Rational>> a) {
    using bouillabaisse::Rational;
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const Rational f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

inline bouillabaisse::Rational sylvester_resultant(const bouillabaisse::Polynomial& p,
                                                   const bouillabaisse::Polynomial& q) {
    using bouillabaisse::Rational;
    const int m = p.degree();
    const int n = q.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m + n == 0) return Rational(1);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i) s[row][row + i] = p.coeff(static_cast<std::size_t>(m - i));
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i) s[n + row][row + i] = q.coeff(static_cast<std::size_t>(n - i));
    return determinant(std::move(s));
}

}  // namespace oracle
