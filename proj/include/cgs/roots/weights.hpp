#pragma once
#include <map>
#include <vector>

#include "cgs/lie/lie.hpp"
#include "cgs/roots/torus.hpp"

namespace cgs {

struct WeightSpace {
    IVec weight;
    std::vector<Matrix<Rational>> matrices;
    std::vector<CliffordElement<Rational>> clifford;
    size_t dim() const { return matrices.size() + clifford.size(); }
};

namespace detail {

using QRow = SparseEchelon<Rational>::Row;

inline Laurent to_laurent(const Rational& c) { return Laurent(c); }

// Ad(T(t)) x as a table coordinate -> Laurent polynomial.
inline std::map<size_t, Laurent> adjoint_image(const Torus& T, const Matrix<Rational>& x) {
    auto y = T.conjugate(x.map(to_laurent), laurent_point(T.rank));
    std::map<size_t, Laurent> out;
    for (size_t k = 0; k < y.entries().size(); ++k)
        if (!y.entries()[k].is_zero()) out[k] = y.entries()[k];
    return out;
}

inline std::map<size_t, Laurent> adjoint_image(const Torus& T, const CliffordPtr<Laurent>& lalg,
                                               const CliffordElement<Rational>& x) {
    std::map<uint32_t, Laurent> c;
    for (auto& [m, v] : x.coeffs()) c[m] = Laurent(v);
    auto y = T.conjugate(CliffordElement<Laurent>(lalg, std::move(c)), laurent_point(T.rank));
    std::map<size_t, Laurent> out;
    for (auto& [m, v] : y.coeffs()) out[m] = v;
    return out;
}

inline IVec exponent_of(const Laurent::Exp& e, size_t r) {
    IVec v(r, 0);
    for (size_t i = 0; i < e.size(); ++i) {
        if (i >= r) throw DecompositionError("monomial in too many variables");
        v[i] = e[i];
    }
    return v;
}

// image = t^chi * x exactly, coordinatewise.
inline bool is_monomial_multiple(const std::map<size_t, Laurent>& image, const QRow& x, const IVec& chi) {
    Laurent::Exp e(chi.begin(), chi.end());
    if (image.size() != x.size()) return false;
    for (auto& [k, c] : x) {
        auto it = image.find(k);
        if (it == image.end() || it->second != Laurent::monomial(e, c)) return false;
    }
    return true;
}

} // namespace detail

// Weight decomposition of Lie(G) under Ad(T). Over the Laurent ring,
// Ad(T(t)) X = sum_chi t^chi Y_chi(X), and the Y_chi are the projections on
// the weight spaces. Each space is then checked to transform by the single
// monomial t^chi, the spaces are checked to fill L, and the zero weight space
// is compared with the Lie algebra of T.
inline std::vector<WeightSpace> adjoint_weights(const Torus& T, const LieAlgebraBasis<Rational>& L) {
    using detail::QRow;
    size_t r = T.rank;
    size_t amb = L.ambient_dim();
    CliffordPtr<Laurent> lalg;
    if (L.is_clifford()) {
        if (!T.is_clifford()) throw DimensionMismatch("Clifford algebra needs a Clifford torus");
        lalg = T.algebra<Laurent>();
    }
    auto image = [&](size_t b) {
        return L.is_clifford() ? detail::adjoint_image(T, lalg, L.clifford[b]) : detail::adjoint_image(T, L.matrices[b]);
    };
    auto coords_of = [&](size_t b) {
        return L.is_clifford() ? detail::coords(L.clifford[b]) : detail::coords(L.matrices[b]);
    };

    std::map<IVec, std::vector<QRow>> parts;
    for (size_t b = 0; b < L.dim(); ++b) {
        auto img = image(b);
        std::map<IVec, QRow> split;
        QRow at_one;
        for (auto& [k, p] : img)
            for (auto& [e, c] : p.terms()) {
                split[detail::exponent_of(e, r)][k] += c;
                at_one[k] += c;
            }
        std::erase_if(at_one, [](auto& kv) { return kv.second.is_zero(); });
        if (at_one != coords_of(b)) throw StructuralFailure("projections do not sum back to the basis vector");
        for (auto& [chi, row] : split) parts[chi].push_back(row);
    }

    auto ambient = detail::span_of(L);
    std::vector<WeightSpace> out;
    size_t total = 0;
    for (auto& [chi, rows] : parts) {
        bool zero = std::all_of(chi.begin(), chi.end(), [](long x) { return x == 0; });
        SparseEchelon<Rational> ech(amb);
        if (zero && L.modulo_scalars) ech.add(detail::coords(Matrix<Rational>::identity(L.group.n)));
        WeightSpace w;
        w.weight = chi;
        for (auto& row : rows) {
            std::erase_if(row, [](auto& kv) { return kv.second.is_zero(); });
            if (row.empty() || !ech.add(row)) continue;
            if (!ambient.contains(row)) throw StructuralFailure("weight component outside the Lie algebra");
            std::map<size_t, Laurent> img;
            if (L.is_clifford()) {
                std::map<uint32_t, Rational> c(row.begin(), row.end());
                CliffordElement<Rational> x(L.algebra, std::move(c));
                img = detail::adjoint_image(T, lalg, x);
                w.clifford.push_back(x);
            } else {
                Vec<Rational> v(amb);
                for (auto& [k, c] : row) v[k] = c;
                Matrix<Rational> x(L.group.n, L.group.n, std::move(v));
                img = detail::adjoint_image(T, x);
                w.matrices.push_back(x);
            }
            if (!detail::is_monomial_multiple(img, row, chi))
                throw DecompositionError("eigenvalue on weight " + str(chi) + " is not the monomial t^chi");
        }
        total += w.dim();
        if (w.dim() > 0) out.push_back(std::move(w));
    }
    if (total != L.dim()) throw DecompositionError("weight spaces have total dimension " + std::to_string(total));

    // zero weight space = Lie(T)
    SparseEchelon<Rational> t0(amb), v0(amb);
    if (L.modulo_scalars) {
        t0.add(detail::coords(Matrix<Rational>::identity(L.group.n)));
        v0.add(detail::coords(Matrix<Rational>::identity(L.group.n)));
    }
    if (L.is_clifford())
        for (auto& x : torus_lie_clifford(T, L.algebra)) t0.add(detail::coords(x));
    else
        for (auto& x : torus_lie_matrices(T)) t0.add(detail::coords(x));
    for (auto& w : out)
        if (std::all_of(w.weight.begin(), w.weight.end(), [](long x) { return x == 0; })) {
            for (auto& x : w.matrices) v0.add(detail::coords(x));
            for (auto& x : w.clifford) v0.add(detail::coords(x));
        }
    bool same = t0.rank() == v0.rank();
    if (same) {
        for (size_t b = 0; b < T.rank && same; ++b) {
            auto row = L.is_clifford() ? detail::coords(torus_lie_clifford(T, L.algebra)[b])
                                       : detail::coords(torus_lie_matrices(T)[b]);
            same = v0.contains(row);
        }
    }
    if (!same) throw DecompositionError("zero weight space differs from the Lie algebra of the torus");
    return out;
}

} // namespace cgs
