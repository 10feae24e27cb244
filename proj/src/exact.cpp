#include "kneser/exact.hpp"

#include <stdexcept>
#include <utility>

namespace kneser {

BigInt determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant requires a square matrix");
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : BigInt(-m[n - 1][n - 1]);
}

IntVector orthogonal_complement(const IntMatrix& rows) {
    const std::size_t r = rows.size();
    const std::size_t d = r + 1;
    for (const auto& row : rows)
        if (row.size() != d) throw std::invalid_argument("orthogonal_complement expects d-1 rows of length d");
    IntVector normal(d);
    IntMatrix minor(r, IntVector(r));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t c = 0, mc = 0; c < d; ++c)
                if (c != j) minor[i][mc++] = rows[i][c];
        BigInt cof = determinant(minor);
        // Laplace expansion of det([rows; x]) along the last row.
        normal[j] = ((r + j) % 2 == 0) ? cof : BigInt(-cof);
    }
    return normal;
}

BigInt dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace kneser
