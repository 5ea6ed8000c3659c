#pragma once
#include <utility>
#include <vector>

#include "cgs/quad/quadform.hpp"

namespace cgs {

// (M_N, eta, f) with eta(x) = H^{-1} x^T H and f(X) = tr(F X) on symmetric X.
template <Ring R>
struct QuadraticPair {
    Matrix<R> h, h_inv;
    Matrix<R> f_matrix;
    std::vector<std::pair<Matrix<R>, R>> f_table;  // symmetric basis element -> f value

    size_t degree() const { return h.rows(); }

    template <Ring S = R>
    Matrix<S> eta(const Matrix<S>& x) const {
        auto li = [](const R& r) { return lift<S>(r); };
        return h_inv.map(li) * x.transpose() * h.map(li);
    }
    template <Ring S = R>
    S f(const Matrix<S>& x) const {
        S acc;
        for (size_t i = 0; i < degree(); ++i)
            for (size_t j = 0; j < degree(); ++j)
                if (!f_matrix(i, j).is_zero() && !x(j, i).is_zero()) acc += lift<S>(f_matrix(i, j)) * x(j, i);
        return acc;
    }
    bool is_symmetric(const Matrix<R>& x) const { return eta(x) == x; }
};

// Split pair of degree 2n on the basis where q = sum x_{2i-1} x_{2i}.
template <Ring R>
QuadraticPair<R> split_quadratic_pair(size_t n) {
    size_t N = 2 * n;
    QuadraticPair<R> p;
    p.h = Matrix<R>(N, N);
    p.f_matrix = Matrix<R>(N, N);
    for (size_t i = 0; i < n; ++i) {
        p.h(2 * i, 2 * i + 1) = R(1);
        p.h(2 * i + 1, 2 * i) = R(1);
        p.f_matrix(2 * i, 2 * i) = R(1);
    }
    p.h_inv = p.h;
    auto E = [N](size_t a, size_t b) { return Matrix<R>::unit(N, N, a, b); };
    // 0-based: odd index 2i-1 -> 2i, even index 2i -> 2i+1
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) p.f_table.emplace_back(E(2 * i, 2 * j) + E(2 * j + 1, 2 * i + 1), R(i == j ? 1 : 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            p.f_table.emplace_back(E(2 * i, 2 * j + 1) + E(2 * j, 2 * i + 1), R(0));
            p.f_table.emplace_back(E(2 * i + 1, 2 * j) + E(2 * j + 1, 2 * i), R(0));
        }
    for (size_t i = 0; i < n; ++i) {
        p.f_table.emplace_back(E(2 * i + 1, 2 * i), R(0));
        p.f_table.emplace_back(E(2 * i, 2 * i + 1), R(0));
    }
    return p;
}

// phi_q(m (x) m') = m b_q(m', -)
template <Ring R>
Matrix<R> phi(const QuadraticModule<R>& q, const Vec<R>& m, const Vec<R>& mp) {
    size_t n = q.rank();
    Vec<R> bm = q.gram().transpose() * mp;
    Matrix<R> out(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out(i, j) = m[i] * bm[j];
    return out;
}

template <Ring R>
QuadraticPair<R> pair_from_form(const QuadraticModule<R>& q) {
    if (q.rank() % 2) throw DimensionMismatch("quadratic pairs need even rank");
    if (!is_regular(q)) throw NotInvertible("pair_from_form needs a regular form");
    QuadraticPair<R> p;
    p.h = q.gram();
    p.h_inv = inverse(p.h);
    p.f_matrix = p.h_inv * q.coeffs;
    size_t n = q.rank();
    for (size_t i = 0; i < n; ++i) {
        auto ei = basis_vector<R>(n, i);
        p.f_table.emplace_back(phi(q, ei, ei), q(i, i));
        for (size_t j = i + 1; j < n; ++j) {
            auto ej = basis_vector<R>(n, j);
            p.f_table.emplace_back(phi(q, ei, ej) + phi(q, ej, ei), q(i, j));
        }
    }
    return p;
}

} // namespace cgs
