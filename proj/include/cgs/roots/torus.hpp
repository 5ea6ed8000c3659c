#pragma once
#include <string>
#include <utility>
#include <vector>

#include "cgs/cliff/clifford.hpp"
#include "cgs/quad/quadform.hpp"
#include "cgs/ring/dual.hpp"
#include "cgs/ring/laurent.hpp"
#include "cgs/roots/datum.hpp"

namespace cgs {

// A split torus of rank r, given by its cocharacters.
// Matrix tori: diag(t^{d_0}, ..., t^{d_{N-1}}) with exponent vectors d_k.
// Clifford tori: the product of cocharacters k, each a sum of
// alpha_k^{e} * (word in the generators).
struct Torus {
    struct Term {
        int exponent;
        std::vector<size_t> word;
    };

    size_t rank = 0;
    std::vector<std::string> cochar_labels;
    std::vector<IVec> diag;
    Matrix<Rational> form;  // Clifford tori: coefficient table of the form
    std::vector<std::vector<Term>> cochars;

    bool is_clifford() const { return !cochars.empty(); }

    template <Ring S>
    Matrix<S> matrix(const std::vector<S>& pt) const {
        check(pt.size());
        std::vector<S> d;
        for (auto& e : diag) {
            S x(1);
            for (size_t k = 0; k < rank; ++k)
                if (e[k] != 0) x = x * pow(pt[k], e[k]);
            d.push_back(x);
        }
        return Matrix<S>::diagonal(d);
    }

    template <Ring S>
    CliffordPtr<S> algebra() const {
        return clifford_algebra(QuadraticModule<S>(form.map([](const Rational& c) { return lift<S>(c); })));
    }

    template <Ring S>
    CliffordElement<S> cocharacter(const CliffordPtr<S>& alg, size_t k, const S& a) const {
        CliffordElement<S> x(alg);
        for (auto& t : cochars.at(k)) {
            auto w = CliffordElement<S>::scalar(alg, pow(a, t.exponent));
            for (size_t g : t.word) w = w * CliffordElement<S>::generator(alg, g);
            x += w;
        }
        return x;
    }

    template <Ring S>
    CliffordElement<S> element(const CliffordPtr<S>& alg, const std::vector<S>& pt) const {
        check(pt.size());
        auto x = CliffordElement<S>::scalar(alg, S(1));
        for (size_t k = 0; k < rank; ++k) x = x * cocharacter(alg, k, pt[k]);
        return x;
    }

    // T x T^{-1}; Clifford tori act one cocharacter at a time, the inverse of
    // a cocharacter value being its value at the inverse point.
    template <Ring S>
    Matrix<S> conjugate(const Matrix<S>& x, const std::vector<S>& pt) const {
        std::vector<S> ipt;
        for (auto& p : pt) ipt.push_back(p.inv());
        return matrix(pt) * x * matrix(ipt);
    }
    template <Ring S>
    CliffordElement<S> conjugate(const CliffordElement<S>& x, const std::vector<S>& pt) const {
        check(pt.size());
        auto alg = x.algebra();
        auto y = x;
        for (size_t k = 0; k < rank; ++k) y = cocharacter(alg, k, pt[k]) * y * cocharacter(alg, k, pt[k].inv());
        return y;
    }

private:
    void check(size_t n) const {
        if (n != rank) throw DimensionMismatch("torus point has the wrong number of coordinates");
    }
};

inline std::vector<Laurent> laurent_point(size_t r) {
    std::vector<Laurent> v;
    for (size_t k = 0; k < r; ++k) v.push_back(Laurent::var(k));
    return v;
}

// d/d alpha_k at the identity, one Lie element per cocharacter.
inline std::vector<Matrix<Rational>> torus_lie_matrices(const Torus& T) {
    using D = Dual<Rational>;
    std::vector<Matrix<Rational>> out;
    for (size_t k = 0; k < T.rank; ++k) {
        std::vector<D> pt(T.rank, D(1));
        pt[k] = D(Rational(1), Rational(1));
        out.push_back(T.matrix(pt).map([](const D& x) { return x.du(); }));
    }
    return out;
}

inline std::vector<CliffordElement<Rational>> torus_lie_clifford(const Torus& T, const CliffordPtr<Rational>& alg) {
    using D = Dual<Rational>;
    auto dalg = T.algebra<D>();
    std::vector<CliffordElement<Rational>> out;
    for (size_t k = 0; k < T.rank; ++k) {
        auto x = T.cocharacter(dalg, k, D(Rational(1), Rational(1)));
        std::map<uint32_t, Rational> c;
        for (auto& [m, v] : x.coeffs()) c[m] = v.du();
        out.emplace_back(alg, std::move(c));
    }
    return out;
}

// Exponent vectors of the torus on the standard representation: the matrix
// diagonal, or the scaling of each generator under Clifford conjugation.
inline std::vector<IVec> vector_weights(const Torus& T) {
    if (!T.is_clifford()) return T.diag;
    auto alg = T.algebra<Laurent>();
    auto pt = laurent_point(T.rank);
    std::vector<IVec> out;
    for (size_t i = 0; i < alg->rank(); ++i) {
        auto y = T.conjugate(CliffordElement<Laurent>::generator(alg, i), pt);
        auto c = y.coeff(uint32_t(1) << i);
        if (y.coeffs().size() != 1 || !c.is_monomial())
            throw DecompositionError("torus does not act diagonally on generator " + std::to_string(i));
        auto e = c.exponent(T.rank);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

} // namespace cgs
