#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/linalg/linalg.hpp"

namespace cgs {

template <class S, class R>
S lift(const R& r) {
    if constexpr (std::is_same_v<S, R>) return r;
    else return S(r);
}

template <Ring R>
struct BilinearModule {
    Matrix<R> gram;

    size_t rank() const { return gram.rows(); }
    bool is_symmetric() const { return gram == gram.transpose(); }
    bool is_alternating() const {
        if (gram != -gram.transpose()) return false;
        for (size_t i = 0; i < rank(); ++i)
            if (!gram(i, i).is_zero()) return false;
        return true;
    }
    template <Ring S = R>
    S operator()(const Vec<S>& x, const Vec<S>& y) const {
        S acc;
        for (size_t i = 0; i < rank(); ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < rank(); ++j)
                if (!gram(i, j).is_zero() && !y[j].is_zero()) acc += x[i] * lift<S>(gram(i, j)) * y[j];
        }
        return acc;
    }
};

// q(x) = sum_{i<=j} Q_ij x_i x_j with Q upper triangular.
template <Ring R>
struct QuadraticModule {
    Matrix<R> coeffs;

    QuadraticModule() = default;
    explicit QuadraticModule(Matrix<R> q) : coeffs(std::move(q)) {
        if (!coeffs.square()) throw DimensionMismatch("coefficient table must be square");
        for (size_t i = 0; i < coeffs.rows(); ++i)
            for (size_t j = 0; j < i; ++j)
                if (!coeffs(i, j).is_zero()) throw DimensionMismatch("coefficient table must be upper triangular");
    }

    size_t rank() const { return coeffs.rows(); }
    const R& operator()(size_t i, size_t j) const { return coeffs(i, j); }

    template <Ring S = R>
    S value(const Vec<S>& x) const {
        if (x.size() != rank()) throw DimensionMismatch("vector length differs from rank");
        S acc;
        for (size_t i = 0; i < rank(); ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = i; j < rank(); ++j)
                if (!coeffs(i, j).is_zero() && !x[j].is_zero()) acc += lift<S>(coeffs(i, j)) * x[i] * x[j];
        }
        return acc;
    }

    // Polar Gram matrix Q + Q^T.
    Matrix<R> gram() const { return coeffs + coeffs.transpose(); }

    template <Ring S = R>
    S polar(const Vec<S>& x, const Vec<S>& y) const {
        return BilinearModule<R>{gram()}.template operator()<S>(x, y);
    }

    friend bool operator==(const QuadraticModule&, const QuadraticModule&) = default;
};

template <Ring R>
Vec<R> basis_vector(size_t n, size_t i) {
    Vec<R> v(n);
    v[i] = R(1);
    return v;
}

// Even m = 2n: sum x_{2i-1} x_{2i} on e_1..e_2n.  Odd m = 2n+1: x_0^2 plus that
// sum, on e_0, e_1, ..., e_2n (index 0 is e_0).
template <Ring R>
QuadraticModule<R> hyperbolic(size_t m) {
    Matrix<R> q(m, m);
    size_t off = m % 2;
    if (off) q(0, 0) = R(1);
    for (size_t i = off; i + 1 < m; i += 2) q(i, i + 1) = R(1);
    return QuadraticModule<R>(std::move(q));
}

template <Ring R>
QuadraticModule<R> diagonal_form(const std::vector<R>& a) {
    return QuadraticModule<R>(Matrix<R>::diagonal(a));
}

// [a,b] = a x^2 + x y + b y^2
template <Ring R>
QuadraticModule<R> binary_form(const R& a, const R& b) {
    Matrix<R> q(2, 2);
    q(0, 0) = a;
    q(0, 1) = R(1);
    q(1, 1) = b;
    return QuadraticModule<R>(std::move(q));
}

template <Ring R>
QuadraticModule<R> orthogonal_sum(const QuadraticModule<R>& a, const QuadraticModule<R>& b) {
    size_t n = a.rank() + b.rank();
    Matrix<R> q(n, n);
    for (size_t i = 0; i < a.rank(); ++i)
        for (size_t j = 0; j < a.rank(); ++j) q(i, j) = a(i, j);
    for (size_t i = 0; i < b.rank(); ++i)
        for (size_t j = 0; j < b.rank(); ++j) q(a.rank() + i, a.rank() + j) = b(i, j);
    return QuadraticModule<R>(std::move(q));
}

// q'(x) = q(P x): the form in the basis given by the columns of P.
template <Ring R>
QuadraticModule<R> change_basis(const QuadraticModule<R>& q, const Matrix<R>& p) {
    size_t n = p.cols();
    Matrix<R> out(n, n);
    std::vector<Vec<R>> cols;
    for (size_t j = 0; j < n; ++j) cols.push_back(p.column(j));
    for (size_t i = 0; i < n; ++i) {
        out(i, i) = q.value(cols[i]);
        for (size_t j = i + 1; j < n; ++j) out(i, j) = q.polar(cols[i], cols[j]);
    }
    return QuadraticModule<R>(std::move(out));
}

// Reorders the basis: new e_k = old e_{perm[k]}.
template <Ring R>
QuadraticModule<R> permute(const QuadraticModule<R>& q, const std::vector<size_t>& perm) {
    Matrix<R> p(q.rank(), q.rank());
    for (size_t k = 0; k < perm.size(); ++k) p(perm[k], k) = R(1);
    return change_basis(q, p);
}

template <Ring R>
BilinearModule<R> polar(const QuadraticModule<R>& q) {
    return BilinearModule<R>{q.gram()};
}

template <Ring R>
R determinant_scalar(const BilinearModule<R>& b) {
    return det(b.gram);
}

template <Ring R>
bool is_regular(const QuadraticModule<R>& q) {
    return determinant_scalar(polar(q)).is_unit();
}

template <Field K>
std::vector<Vec<K>> radical(const BilinearModule<K>& b) {
    return rref(b.gram).kernel_basis;
}

// Odd rank over a field: regular away from 2; in characteristic 2 the polar
// radical is a line on which q does not vanish.
template <Field K>
bool is_semiregular(const QuadraticModule<K>& q) {
    if (q.rank() % 2 == 0) return is_regular(q);
    if constexpr (K::characteristic != 2) {
        return is_regular(q);
    } else {
        auto rad = radical(polar(q));
        return rad.size() == 1 && !q.value(rad[0]).is_zero();
    }
}

template <Ring R>
struct BinaryDecomposition {
    std::vector<std::pair<R, R>> blocks;
    Matrix<R> basis;  // columns u1, w1, u2, w2, ...
};

template <Field K>
BinaryDecomposition<K> binary_decompose(const QuadraticModule<K>& q) {
    size_t n = q.rank();
    if (n % 2) throw DecompositionError("binary decomposition needs even rank");
    if (!is_regular(q)) throw DecompositionError("binary decomposition needs a regular form");
    std::vector<Vec<K>> w;
    for (size_t i = 0; i < n; ++i) w.push_back(basis_vector<K>(n, i));
    BinaryDecomposition<K> out;
    std::vector<Vec<K>> cols;
    while (!w.empty()) {
        size_t iu = 0;
        for (size_t i = 0; i < w.size(); ++i)
            if (!q.value(w[i]).is_zero()) {
                iu = i;
                break;
            }
        Vec<K> u = w[iu];
        K qu = q.value(u);
        auto regular_plane = [&](const Vec<K>& v) {
            K b = q.polar(u, v);
            return !b.is_zero() && !(K(4) * qu * q.value(v) - b * b).is_zero();
        };
        std::optional<Vec<K>> partner;
        for (size_t j = 0; j < w.size() && !partner; ++j)
            if (j != iu && regular_plane(w[j])) partner = w[j];
        if (!partner) {
            // away from characteristic 2: u + z with z an anisotropic vector of u-perp
            Matrix<K> cons(1, w.size());
            for (size_t j = 0; j < w.size(); ++j) cons(0, j) = q.polar(u, w[j]);
            std::vector<Vec<K>> perp;
            for (auto& c : rref(cons).kernel_basis) {
                Vec<K> x(n);
                for (size_t j = 0; j < w.size(); ++j)
                    for (size_t k = 0; k < n; ++k) x[k] += c[j] * w[j][k];
                perp.push_back(std::move(x));
            }
            std::optional<Vec<K>> z;
            for (auto& x : perp)
                if (!z && !q.value(x).is_zero()) z = x;
            for (size_t i = 0; i < perp.size() && !z; ++i)
                for (size_t j = i + 1; j < perp.size() && !z; ++j)
                    if (!q.polar(perp[i], perp[j]).is_zero()) {
                        Vec<K> x(n);
                        for (size_t k = 0; k < n; ++k) x[k] = perp[i][k] + perp[j][k];
                        z = x;
                    }
            if (!z) throw DecompositionError("no regular plane through the pivot vector");
            Vec<K> s(n);
            for (size_t k = 0; k < n; ++k) s[k] = u[k] + (*z)[k];
            partner = s;
        }
        Vec<K> v = *partner;
        K bv = q.polar(u, v);
        if (bv.is_zero()) throw DecompositionError("no hyperbolic partner found");
        K inv = bv.inv();
        for (auto& x : v) x = x * inv;
        out.blocks.emplace_back(q.value(u), q.value(v));
        cols.push_back(u);
        cols.push_back(v);
        // orthogonal complement of span(u, v) inside span(w)
        Matrix<K> cons(2, w.size());
        for (size_t j = 0; j < w.size(); ++j) {
            cons(0, j) = q.polar(u, w[j]);
            cons(1, j) = q.polar(v, w[j]);
        }
        std::vector<Vec<K>> next;
        for (auto& c : rref(cons).kernel_basis) {
            Vec<K> x(n);
            for (size_t j = 0; j < w.size(); ++j)
                for (size_t k = 0; k < n; ++k) x[k] += c[j] * w[j][k];
            next.push_back(std::move(x));
        }
        w = std::move(next);
    }
    out.basis = Matrix<K>::from_columns(cols, n);
    QuadraticModule<K> check = binary_form(out.blocks[0].first, out.blocks[0].second);
    for (size_t i = 1; i < out.blocks.size(); ++i)
        check = orthogonal_sum(check, binary_form(out.blocks[i].first, out.blocks[i].second));
    if (change_basis(q, out.basis) != check) throw DecompositionError("change-of-basis verification failed");
    return out;
}

// tau_v(x) = x - (b_q(x,v)/q(v)) v
template <Ring R>
Matrix<R> reflection(const QuadraticModule<R>& q, const Vec<R>& v) {
    R qv = q.value(v);
    if (!qv.is_unit()) throw NotInvertible("q(v) = " + qv.str() + " is not a unit");
    R inv = qv.inv();
    size_t n = q.rank();
    Vec<R> bv = q.gram() * v;
    Matrix<R> m = Matrix<R>::identity(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) -= v[i] * bv[j] * inv;
    return m;
}

// Polar Gram preserved and q preserved on every basis vector; char-2 safe.
template <Ring R>
bool preserves_form(const QuadraticModule<R>& q, const Matrix<R>& g) {
    if (g.rows() != q.rank() || g.cols() != q.rank()) throw DimensionMismatch("matrix size differs from rank");
    Matrix<R> b = q.gram();
    if (g.transpose() * b * g != b) return false;
    for (size_t i = 0; i < q.rank(); ++i)
        if (q.value(g.column(i)) != q(i, i)) return false;
    return true;
}

template <Ring R>
bool in_orthogonal_group(const QuadraticModule<R>& q, const Matrix<R>& g) {
    return preserves_form(q, g) && det(g).is_unit();
}

template <Ring R>
Matrix<R> product_of_reflections(const QuadraticModule<R>& q, const std::vector<Vec<R>>& vs) {
    Matrix<R> m = Matrix<R>::identity(q.rank());
    for (auto& v : vs) m = m * reflection(q, v);
    return m;
}

} // namespace cgs
