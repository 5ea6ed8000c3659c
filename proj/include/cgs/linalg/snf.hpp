#pragma once
#include <vector>

#include "cgs/linalg/matrix.hpp"
#include "cgs/ring/integer.hpp"

namespace cgs {

struct SmithForm {
    std::vector<Integer> divisors;  // d1 | d2 | ... (nonzero part first, then zeros)
    Matrix<Integer> left, right;    // left * m * right = diag(divisors)
    Matrix<Integer> diagonal;
};

namespace detail {

inline void swap_rows(Matrix<Integer>& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(Matrix<Integer>& m, size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] -= f * row[src]
inline void add_row(Matrix<Integer>& m, size_t dst, size_t src, const Integer& f) {
    for (size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}
inline void add_col(Matrix<Integer>& m, size_t dst, size_t src, const Integer& f) {
    for (size_t i = 0; i < m.rows(); ++i) m(i, dst) -= f * m(i, src);
}

} // namespace detail

// Pivot on the smallest nonzero absolute value of the remaining block, ties
// broken in row-major order; clear the pivot row and column by Euclidean
// steps; repair divisibility by folding an offending row into the pivot row.
inline SmithForm smith_normal_form(const Matrix<Integer>& m) {
    using detail::add_col;
    using detail::add_row;
    size_t rows = m.rows(), cols = m.cols();
    Matrix<Integer> a = m, left = Matrix<Integer>::identity(rows), right = Matrix<Integer>::identity(cols);
    size_t t = 0;
    while (t < std::min(rows, cols)) {
        // pivot selection
        bool found = false;
        size_t pi = 0, pj = 0;
        Integer best;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (a(i, j).is_zero()) continue;
                Integer v = a(i, j).abs();
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        detail::swap_rows(a, t, pi);
        detail::swap_rows(left, t, pi);
        detail::swap_cols(a, t, pj);
        detail::swap_cols(right, t, pj);

        bool dirty = false;
        for (size_t i = t + 1; i < rows; ++i) {
            if (a(i, t).is_zero()) continue;
            Integer q, r;
            Integer::divmod(a(i, t), a(t, t), q, r);
            add_row(a, i, t, q);
            add_row(left, i, t, q);
            if (!r.is_zero()) dirty = true;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (a(t, j).is_zero()) continue;
            Integer q, r;
            Integer::divmod(a(t, j), a(t, t), q, r);
            add_col(a, j, t, q);
            add_col(right, j, t, q);
            if (!r.is_zero()) dirty = true;
        }
        if (dirty) continue;  // a smaller remainder exists; re-pivot

        bool fixed = true;
        for (size_t i = t + 1; i < rows && fixed; ++i)
            for (size_t j = t + 1; j < cols; ++j) {
                Integer q, r;
                Integer::divmod(a(i, j), a(t, t), q, r);
                if (!r.is_zero()) {
                    // row t += row i
                    add_row(a, t, i, Integer(-1));
                    add_row(left, t, i, Integer(-1));
                    fixed = false;
                    break;
                }
            }
        if (!fixed) continue;
        if (a(t, t).sign() < 0) {
            for (size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
            for (size_t j = 0; j < rows; ++j) left(t, j) = -left(t, j);
        }
        ++t;
    }
    SmithForm s;
    for (size_t i = 0; i < std::min(rows, cols); ++i) s.divisors.push_back(a(i, i));
    s.left = std::move(left);
    s.right = std::move(right);
    s.diagonal = std::move(a);
    return s;
}

} // namespace cgs
