#pragma once
#include <map>
#include <random>
#include <vector>

#include "cgs/groups/groups.hpp"
#include "cgs/ring/tangent.hpp"

namespace cgs {

// A basis of Lie(G). Matrix families fill `matrices`, Spin fills `clifford`.
// For projective groups the matrices are representatives modulo the scalar line.
template <Field K>
struct LieAlgebraBasis {
    GroupId group;
    std::vector<Matrix<K>> matrices;
    std::vector<CliffordElement<K>> clifford;
    CliffordPtr<K> algebra;
    bool modulo_scalars = false;

    size_t dim() const { return matrices.size() + clifford.size(); }
    bool is_clifford() const { return bool(algebra); }
    size_t ambient_dim() const { return algebra ? algebra->dimension() : group.n * group.n; }
};

template <Ring R>
Matrix<R> bracket(const Matrix<R>& x, const Matrix<R>& y) {
    return x * y - y * x;
}

template <Ring R>
CliffordElement<R> bracket(const CliffordElement<R>& x, const CliffordElement<R>& y) {
    return x * y - y * x;
}

namespace detail {

template <Field K>
typename SparseEchelon<K>::Row coords(const Matrix<K>& x) {
    typename SparseEchelon<K>::Row r;
    for (size_t k = 0; k < x.entries().size(); ++k)
        if (!x.entries()[k].is_zero()) r[k] = x.entries()[k];
    return r;
}

template <Field K>
typename SparseEchelon<K>::Row coords(const CliffordElement<K>& x) {
    typename SparseEchelon<K>::Row r;
    for (auto& [m, c] : x.coeffs()) r[m] = c;
    return r;
}

// Echelon form of the span, with the identity thrown in for projective groups.
template <Field K>
SparseEchelon<K> span_of(const LieAlgebraBasis<K>& L) {
    SparseEchelon<K> ech(L.ambient_dim());
    if (L.modulo_scalars) ech.add(coords(Matrix<K>::identity(L.group.n)));
    for (auto& x : L.matrices) ech.add(coords(x));
    for (auto& x : L.clifford) ech.add(coords(x));
    return ech;
}

// One column of constraints per direction: the residuals are evaluated at
// Id + tX over the tangent ring, and their t-parts are linear in X.
template <Field K, class Payload, class Eval>
std::vector<Vec<K>> linear_kernel(const std::vector<Payload>& directions, Eval&& residuals_at) {
    std::map<size_t, typename SparseEchelon<K>::Row> rows;
    for (size_t col = 0; col < directions.size(); ++col) {
        auto res = residuals_at(directions[col]);
        for (size_t r = 0; r < res.size(); ++r) {
            if (!res[r].base().is_zero()) throw StructuralFailure("identity fails a defining equation");
            K c = res[r].coeff(0);
            if (!c.is_zero()) rows[r][col] = c;
        }
    }
    SparseEchelon<K> ech(directions.size());
    for (auto& [r, row] : rows) ech.add(row);
    return ech.kernel();
}

inline Family preimage_family(Family f) {
    switch (f) {
    case Family::PGL: return Family::GL;
    case Family::PGO:
    case Family::PGOplus: return Family::GO;
    case Family::Oplus: return Family::O;
    default: return f;
    }
}

} // namespace detail

// Tangent condition for one matrix: Id + tX satisfies the equations of G
// over the dual numbers. For projective groups, X is tested in the preimage.
template <Field K>
bool tangent_condition(const ClassicalGroup<K>& G, const Matrix<K>& x) {
    using T = Tangent<K>;
    auto g = Matrix<T>::identity(G.id().n) + x.map([](const K& c) { return T::var(0, c); });
    for (auto& r : G.residuals(g))
        if (!r.is_zero()) return false;
    return true;
}

template <Field K>
bool tangent_condition(const ClassicalGroup<K>& G, const CliffordElement<K>& x) {
    using T = Tangent<K>;
    auto talg = clifford_algebra(QuadraticModule<T>(G.form().coeffs.map([](const K& c) { return T(c); })));
    std::map<uint32_t, T> c{{0, T(K(1))}};
    for (auto& [m, v] : x.coeffs()) c[m] += T::var(0, v);
    for (auto& r : spin_residuals(CliffordElement<T>(talg, std::move(c))))
        if (!r.is_zero()) return false;
    return true;
}

// Lie(G) as the kernel of the linearized defining equations.
template <Field K>
LieAlgebraBasis<K> lie_algebra(const ClassicalGroup<K>& G) {
    using T = Tangent<K>;
    GroupId id = G.id();
    LieAlgebraBasis<K> out;
    out.group = id;
    if (id.family == Family::Spin) {
        auto alg = clifford_algebra(G.form());
        auto talg = clifford_algebra(QuadraticModule<T>(G.form().coeffs.map([](const K& c) { return T(c); })));
        auto masks = detail::masks_of_parity(alg, 0);
        auto kernel = detail::linear_kernel<K>(masks, [&](uint32_t m) {
            std::map<uint32_t, T> c{{0, T(K(1))}};
            c[m] += T::var(0);
            return spin_residuals(CliffordElement<T>(talg, std::move(c)));
        });
        out.algebra = alg;
        for (auto& v : kernel) {
            std::map<uint32_t, K> c;
            for (size_t k = 0; k < masks.size(); ++k)
                if (!v[k].is_zero()) c[masks[k]] = v[k];
            out.clifford.emplace_back(alg, std::move(c));
        }
        return out;
    }
    if (is_clifford_family(id.family)) throw UnsupportedCase("Lie algebra of " + id.str() + " is not implemented");

    size_t n = id.n;
    Family pre = detail::preimage_family(id.family);
    ClassicalGroup<K> P = pre == id.family ? G : ClassicalGroup<K>({pre, n}, G.form());
    std::vector<std::pair<size_t, size_t>> dirs;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) dirs.emplace_back(i, j);
    auto kernel = detail::linear_kernel<K>(dirs, [&](std::pair<size_t, size_t> d) {
        auto g = Matrix<T>::identity(n);
        g(d.first, d.second) += T::var(0);
        return P.residuals(g);
    });
    std::vector<Matrix<K>> pre_basis;
    for (auto& v : kernel) pre_basis.push_back(Matrix<K>(n, n, v));

    if (!is_projective_family(id.family)) {
        out.matrices = std::move(pre_basis);
        return out;
    }
    // Quotient by the scalar line: keep the basis vectors independent of Id
    // and of the ones kept before.
    out.modulo_scalars = true;
    SparseEchelon<K> ech(n * n);
    if (!ech.add(detail::coords(Matrix<K>::identity(n)))) throw StructuralFailure("zero identity");
    for (auto& x : pre_basis)
        if (ech.add(detail::coords(x))) out.matrices.push_back(x);
    if (out.matrices.size() + 1 != pre_basis.size()) throw StructuralFailure("scalars are not tangent to the preimage");
    return out;
}

template <Field K>
LieAlgebraBasis<K> lie_algebra(GroupId id) {
    return lie_algebra(ClassicalGroup<K>(id));
}

// The explicit bases of the orthogonal, spin, symplectic and similitude
// algebras, in the coordinates of hyperbolic<K>(n) (orthogonal and spin) or
// symplectic_form<K>(n) (symplectic). Index conventions: odd rank 2m+1 uses
// e_0, ..., e_{2m}; even rank uses e_1, ..., e_{2m}, stored 0-based.
template <Field K>
LieAlgebraBasis<K> explicit_basis(GroupId id) {
    size_t N = id.n;
    LieAlgebraBasis<K> out;
    out.group = id;
    auto range = [&](bool ok, size_t max) {
        if (!ok || N > max) throw DimensionMismatch("no explicit basis for " + id.str());
    };
    auto E = [N](size_t a, size_t b) { return Matrix<K>::unit(N, N, a, b); };
    auto add = [&](Matrix<K> m) { out.matrices.push_back(std::move(m)); };
    switch (id.family) {
    case Family::SO: {
        range(N % 2 == 1 && N >= 3, 11);
        size_t n = N / 2;
        for (size_t i = 1; i <= n; ++i) {
            add(E(0, 2 * i) - K(2) * E(2 * i - 1, 0));
            add(E(0, 2 * i - 1) - K(2) * E(2 * i, 0));
        }
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = 1; j <= n; ++j) add(E(2 * i - 1, 2 * j - 1) - E(2 * j, 2 * i));
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = i + 1; j <= n; ++j) {
                add(E(2 * i - 1, 2 * j) - E(2 * j - 1, 2 * i));
                add(E(2 * i, 2 * j - 1) - E(2 * j, 2 * i - 1));
            }
        break;
    }
    case Family::Spin: {
        range(N >= 2, 10);
        auto alg = clifford_algebra(hyperbolic<K>(N));
        out.algebra = alg;
        size_t n = N / 2;
        // 1-based index k -> stored index
        size_t shift = N % 2 ? 0 : 1;
        auto idx = [shift](size_t k) { return k - shift; };
        auto w = [&](size_t a, size_t b) { return CliffordElement<K>::word(alg, {idx(a), idx(b)}); };
        auto one = CliffordElement<K>::scalar(alg, K(1));
        out.clifford.push_back(one - K(2) * w(2 * n - 1, 2 * n));
        for (size_t i = 1; i < n; ++i) out.clifford.push_back(w(2 * i - 1, 2 * i) - w(2 * n - 1, 2 * n));
        for (size_t i = shift; i <= 2 * n; ++i)
            for (size_t j = i + 1; j <= 2 * n; ++j) {
                if (i % 2 == 1 && j == i + 1) continue;
                out.clifford.push_back(w(i, j));
            }
        break;
    }
    case Family::Sp:
    case Family::PGSp: {
        range(N % 2 == 0 && N >= 2, 12);
        size_t n = N / 2;
        // 1-based (i, j) -> 0-based
        auto S = [&](size_t a, size_t b) { return E(a - 1, b - 1); };
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = 1; j <= n; ++j) add(S(i, j) - S(j + n, i + n));
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = i + 1; j <= n; ++j) {
                add(S(i, n + j) + S(j, n + i));
                add(S(n + i, j) + S(n + j, i));
            }
        for (size_t i = 1; i <= n; ++i) {
            add(S(i, n + i));
            add(S(n + i, i));
        }
        out.modulo_scalars = id.family == Family::PGSp;
        break;
    }
    case Family::GO:
    case Family::PGO: {
        bool proj = id.family == Family::PGO;
        range(N % 2 == 0 && N >= (proj ? 4u : 2u), 12);
        size_t n = N / 2;
        auto S = [&](size_t a, size_t b) { return E(a - 1, b - 1); };
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = 1; j <= n; ++j)
                if (i != j) add(S(2 * i - 1, 2 * j - 1) - S(2 * j, 2 * i));
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = i + 1; j <= n; ++j) {
                add(S(2 * i - 1, 2 * j) - S(2 * j - 1, 2 * i));
                add(S(2 * i, 2 * j - 1) - S(2 * j, 2 * i - 1));
            }
        for (size_t i = 2; i <= (proj ? n - 1 : n); ++i) add(S(2 * i - 1, 2 * i - 1) - S(2 * i, 2 * i));
        Matrix<K> tail(N, N);
        for (size_t i = 2; i <= n; ++i) tail = tail + S(2 * i, 2 * i);
        add(S(1, 1) + tail);
        add(S(2, 2) + tail);
        out.modulo_scalars = proj;
        break;
    }
    default: throw UnsupportedCase("no explicit basis for " + id.str());
    }
    return out;
}

// Same span (modulo scalars for projective groups).
template <Field K>
bool same_span(const LieAlgebraBasis<K>& a, const LieAlgebraBasis<K>& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulo_scalars != b.modulo_scalars) return false;
    auto ea = detail::span_of(a), eb = detail::span_of(b);
    if (ea.rank() != eb.rank()) return false;
    for (auto& x : b.matrices)
        if (!ea.contains(detail::coords(x))) return false;
    for (auto& x : b.clifford)
        if (!ea.contains(detail::coords(x))) return false;
    return true;
}

// The elements are linearly independent (modulo scalars when projective).
template <Field K>
bool is_independent(const LieAlgebraBasis<K>& L) {
    return detail::span_of(L).rank() == L.dim() + (L.modulo_scalars ? 1 : 0);
}

// Every bracket of basis elements lies in the span.
template <Field K>
bool closure_check(const LieAlgebraBasis<K>& L) {
    auto ech = detail::span_of(L);
    for (size_t i = 0; i < L.matrices.size(); ++i)
        for (size_t j = i + 1; j < L.matrices.size(); ++j)
            if (!ech.contains(detail::coords(bracket(L.matrices[i], L.matrices[j])))) return false;
    for (size_t i = 0; i < L.clifford.size(); ++i)
        for (size_t j = i + 1; j < L.clifford.size(); ++j)
            if (!ech.contains(detail::coords(bracket(L.clifford[i], L.clifford[j])))) return false;
    return true;
}

} // namespace cgs
