#ifndef JACPROF_LINALG_HPP
#define JACPROF_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "exactfield.hpp"

namespace jacprof {

using Matrix = std::vector<std::vector<FieldElement>>;

inline Matrix zero_matrix(std::size_t rows, std::size_t cols)
{
    return Matrix(rows, std::vector<FieldElement>(cols));
}

/* Bareiss fraction-free elimination */
inline FieldElement determinant(Matrix m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return FieldElement(1);
    for (const auto& row : m)
        if (row.size() != n)
            fail(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
    FieldElement prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].is_zero())
            ++p;
        if (p == n)
            return FieldElement();
        if (p != k) {
            std::swap(m[p], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = FieldElement();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/* fraction-free elimination with column skipping; exact over the field */
inline std::size_t rank(Matrix m)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m[0].size();
    FieldElement prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = FieldElement();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/* basis of {x : m x = 0}, one vector per free column of the reduced echelon form */
inline std::vector<std::vector<FieldElement>> kernel(Matrix m, std::size_t cols)
{
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        FieldElement inv = FieldElement(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            FieldElement f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<FieldElement> v(cols);
        v[free] = FieldElement(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace jacprof

#endif
