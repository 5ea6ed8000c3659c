#pragma once
#include <set>
#include <string>
#include <vector>

#include "cgs/roots/families.hpp"
#include "cgs/roots/weights.hpp"

namespace cgs {

struct BuiltDatum {
    RootFamily family;
    size_t N;
    RootDatum datum;
    Torus torus;
    LieAlgebraBasis<Rational> lie;
    std::vector<WeightSpace> weights;
    std::vector<RootEntry> table;
    std::vector<IVec> searched_coroots;  // in table order
};

inline const WeightSpace* weight_space(const std::vector<WeightSpace>& ws, const IVec& chi) {
    for (auto& w : ws)
        if (w.weight == chi) return &w;
    return nullptr;
}

inline bool in_weight_space(const WeightSpace& w, const RootEntry& e, const CliffordPtr<Rational>& alg) {
    SparseEchelon<Rational> ech(alg ? alg->dimension() : e.x.rows() * e.x.cols());
    for (auto& x : w.matrices) ech.add(detail::coords(x));
    for (auto& x : w.clifford) ech.add(detail::coords(x));
    if (e.is_clifford()) return ech.contains(detail::coords(CliffordElement<Rational>::word(alg, {e.word[0], e.word[1]})));
    return ech.contains(detail::coords(e.x));
}

// Roots from the weight decomposition, coroots from the table; the two are
// matched as sets, the axioms are checked, and the coroot search must agree.
inline BuiltDatum build_datum(RootFamily f, size_t N) {
    require_root_case(f, N);
    BuiltDatum b{f, N, {}, make_torus(f, N), lie_algebra<Rational>(group_of(f, N)), {}, root_table(f, N), {}};
    b.weights = adjoint_weights(b.torus, b.lie);
    size_t r = b.torus.rank;

    std::set<IVec> computed;
    for (auto& w : b.weights) {
        if (std::all_of(w.weight.begin(), w.weight.end(), [](long x) { return x == 0; })) continue;
        if (w.dim() != 1) throw DatumError("root space of " + str(w.weight) + " has dimension " + std::to_string(w.dim()));
        computed.insert(w.weight);
    }
    std::set<IVec> listed;
    for (auto& e : b.table) listed.insert(e.root);
    if (listed.size() != b.table.size()) throw DatumError("repeated root in the table");
    if (computed != listed) {
        std::string msg = "computed roots differ from the table:";
        for (auto& a : computed)
            if (!listed.count(a)) msg += " extra " + str(a);
        for (auto& a : listed)
            if (!computed.count(a)) msg += " missing " + str(a);
        throw DatumError(msg);
    }
    for (auto& e : b.table)
        if (!in_weight_space(*weight_space(b.weights, e.root), e, b.lie.algebra))
            throw DatumError("root vector " + e.label + " is not in the weight space of " + str(e.root));

    auto& d = b.datum;
    d.label = info(f).name + " " + std::to_string(N);
    d.rank = r;
    d.family_hint = info(f).letter;
    d.char_labels = character_labels(f, N);
    d.cochar_labels = b.torus.cochar_labels;
    for (auto& e : b.table) {
        d.roots.push_back(e.root);
        d.coroots.push_back(e.coroot);
    }
    if (auto fail = axiom_failure(d); !fail.empty()) throw DatumError(d.label + ": " + fail);
    b.searched_coroots = search_coroots(d.roots, r);
    for (size_t k = 0; k < d.roots.size(); ++k)
        if (b.searched_coroots[k] != d.coroots[k])
            throw DatumError("coroot search gives " + str(b.searched_coroots[k]) + " for " + str(d.roots[k]) + ", listed " +
                             str(d.coroots[k]));
    return b;
}

namespace detail {

template <Ring S>
Matrix<S> exp_matrix(const RootEntry& e, const S& lam) {
    auto li = [](const Rational& c) { return lift<S>(c); };
    size_t n = e.x.rows();
    return Matrix<S>::identity(n) + lam * e.x.map(li) + (lam * lam) * e.quad.map(li);
}

template <Ring S>
CliffordElement<S> exp_clifford(const RootEntry& e, const CliffordPtr<S>& alg, const S& lam) {
    return CliffordElement<S>::scalar(alg, S(1)) + lam * CliffordElement<S>::word(alg, {e.word[0], e.word[1]});
}

inline Rational character_value(const IVec& chi, const std::vector<Rational>& pt) {
    return laurent_eval(Laurent::monomial(Laurent::Exp(chi.begin(), chi.end())), pt);
}

} // namespace detail

// The exponential of a root: lands in G at sample parameters, has
// derivative X at 0, and satisfies T exp(lambda) T^{-1} = exp(t^a lambda).
inline bool exp_check(const BuiltDatum& b, const RootEntry& e) {
    auto fail = [&](const std::string& what) { throw ExpMismatch(b.datum.label + " " + e.label + ": " + what); };
    const std::vector<Rational> lambdas{Rational(1), Rational(-2), Rational(3), Rational(1) / Rational(2), Rational(-5) / Rational(7)};
    std::vector<std::vector<Rational>> points;
    const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    for (size_t s = 0; s < 2; ++s) {
        std::vector<Rational> pt;
        for (size_t k = 0; k < b.torus.rank; ++k) pt.push_back(s == 0 ? Rational(primes[k]) : Rational(1) / Rational(primes[(k + 3) % 8]));
        points.push_back(pt);
    }
    ClassicalGroup<Rational> G(group_of(b.family, b.N));
    using D = Dual<Rational>;

    if (e.is_clifford()) {
        auto alg = G.algebra();
        auto dalg = b.torus.algebra<D>();
        for (auto& l : lambdas)
            if (!G.contains(detail::exp_clifford(e, alg, l))) fail("exp(" + l.str() + ") is not in the group");
        auto de = detail::exp_clifford(e, dalg, D::eps());
        auto X = CliffordElement<Rational>::word(alg, {e.word[0], e.word[1]});
        for (uint32_t m = 0; m < alg->dimension(); ++m) {
            auto c = de.coeff(m);
            if (c.re() != (m == 0 ? Rational(1) : Rational(0)) || c.du() != X.coeff(m)) fail("derivative at 0 is not X");
        }
        for (auto& pt : points) {
            Rational ta = detail::character_value(e.root, pt);
            for (auto& l : lambdas) {
                auto lhs = b.torus.conjugate(detail::exp_clifford(e, alg, l), pt);
                if (lhs != detail::exp_clifford(e, alg, ta * l)) fail("not equivariant at " + l.str());
            }
        }
        return true;
    }
    for (auto& l : lambdas)
        if (!G.contains(detail::exp_matrix(e, l))) fail("exp(" + l.str() + ") is not in the group");
    auto de = detail::exp_matrix(e, D::eps());
    if (de.map([](const D& x) { return x.re(); }) != Matrix<Rational>::identity(b.N) ||
        de.map([](const D& x) { return x.du(); }) != e.x)
        fail("derivative at 0 is not X");
    for (auto& pt : points) {
        Rational ta = detail::character_value(e.root, pt);
        auto T = b.torus.matrix(pt);
        auto Ti = inverse(T);
        for (auto& l : lambdas)
            if (T * detail::exp_matrix(e, l) * Ti != detail::exp_matrix(e, ta * l)) fail("not equivariant at " + l.str());
    }
    return true;
}

} // namespace cgs
