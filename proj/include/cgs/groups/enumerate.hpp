#pragma once
#include <deque>
#include <functional>
#include <random>

#include "cgs/groups/groups.hpp"

namespace cgs {

struct EnumerationOptions {
    size_t budget = 50'000'000;  // candidate columns tested (matrix families) or group elements (Clifford)
    size_t closure_samples = 2000;
};

template <FiniteRing K>
struct Enumeration {
    GroupId id;
    std::vector<Matrix<K>> matrices;
    std::vector<CliffordElement<K>> clifford;
    size_t nodes = 0;
    bool closed = true;  // Clifford families: generated set closed under products
    size_t size() const { return matrices.size() + clifford.size(); }
};

namespace detail {

// Depth-first search over columns. `accept(cols, c)` decides whether c may be
// the next column given the chosen ones; `leaf` sees complete matrices.
template <FiniteRing K>
void column_search(size_t n, const std::function<const std::vector<Vec<K>>&(size_t)>& candidates_for,
                   const std::function<bool(const std::vector<Vec<K>>&, const Vec<K>&)>& accept,
                   const std::function<void(const Matrix<K>&)>& leaf, size_t budget, size_t& nodes) {
    std::vector<Vec<K>> cols;
    std::function<void()> rec = [&] {
        if (cols.size() == n) {
            leaf(Matrix<K>::from_columns(cols, n));
            return;
        }
        for (const auto& c : candidates_for(cols.size())) {
            if (++nodes > budget) throw BudgetError("enumeration budget exceeded");
            if (!accept(cols, c)) continue;
            cols.push_back(c);
            rec();
            cols.pop_back();
        }
    };
    rec();
}

template <Ring R>
R bilinear(const Matrix<R>& b, const Vec<R>& x, const Vec<R>& y) {
    R acc;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (!b(i, j).is_zero() && !y[j].is_zero()) acc += x[i] * b(i, j) * y[j];
    }
    return acc;
}

template <FiniteRing K>
std::vector<K> units() {
    std::vector<K> out;
    for (auto& x : K::elements())
        if (x.is_unit()) out.push_back(x);
    return out;
}

} // namespace detail

template <FiniteRing K>
Enumeration<K> enumerate_matrix_group(const ClassicalGroup<K>& group, const EnumerationOptions& opt = {}) {
    const GroupId& id = group.id();
    size_t n = id.n;
    Enumeration<K> out;
    out.id = id;
    auto all = all_vectors<K>(n);
    std::vector<Vec<K>> nonzero;
    for (auto& v : all)
        if (std::any_of(v.begin(), v.end(), [](const K& x) { return !x.is_zero(); })) nonzero.push_back(v);

    auto keep = [&](const Matrix<K>& g) {
        if (!group.contains(g)) return;
        if (is_projective_family(id.family) && !is_projective_canonical(g)) return;
        out.matrices.push_back(g);
    };

    Family f = id.family;
    if (f == Family::GL || f == Family::SL || f == Family::PGL) {
        auto cand = [&](size_t) -> const std::vector<Vec<K>>& { return nonzero; };
        auto accept = [&](const std::vector<Vec<K>>& cols, const Vec<K>& c) {
            auto next = cols;
            next.push_back(c);
            return rank(Matrix<K>::from_columns(next, n)) == next.size();
        };
        detail::column_search<K>(n, cand, accept, keep, opt.budget, out.nodes);
        return out;
    }

    // Forms preserved up to a multiplier mu: columns c_i with
    // q(c_i) = mu q(e_i) and b(c_i, c_j) = mu b(e_i, e_j).
    std::vector<K> multipliers{K(1)};
    if (f == Family::PGSp || is_similitude_family(f)) multipliers = detail::units<K>();
    Matrix<K> b;
    std::optional<QuadraticModule<K>> q;
    if (is_symplectic_family(f)) {
        b = group.symplectic();
    } else if (is_orthogonal_family(f) || is_similitude_family(f)) {
        q = group.form();
        b = q->gram();
    } else {
        throw UnsupportedCase("not a matrix family: " + id.str());
    }
    std::map<K, std::vector<Vec<K>>> by_value;
    if (q)
        for (auto& v : nonzero) by_value[q->value(v)].push_back(v);
    for (const K& mu : multipliers) {
        std::vector<std::vector<Vec<K>>> per_column(n);
        for (size_t i = 0; i < n; ++i) per_column[i] = q ? by_value[mu * (*q)(i, i)] : nonzero;
        auto cand = [&](size_t i) -> const std::vector<Vec<K>>& { return per_column[i]; };
        auto accept = [&](const std::vector<Vec<K>>& cols, const Vec<K>& c) {
            size_t i = cols.size();
            for (size_t j = 0; j < i; ++j)
                if (detail::bilinear(b, cols[j], c) != mu * b(j, i)) return false;
            return true;
        };
        detail::column_search<K>(n, cand, accept, keep, opt.budget, out.nodes);
    }
    return out;
}

// The group generated by vectors with q(v) a unit and by the scalars.
template <FiniteRing K>
Enumeration<K> enumerate_clifford_group(const ClassicalGroup<K>& group, const EnumerationOptions& opt = {}) {
    const GroupId& id = group.id();
    auto alg = group.algebra();
    const auto& q = group.form();
    std::vector<CliffordElement<K>> gens;
    for (auto& v : all_vectors<K>(id.n))
        if (q.value(v).is_unit()) gens.push_back(CliffordElement<K>::vector(alg, v));
    for (auto& u : detail::units<K>()) gens.push_back(CliffordElement<K>::scalar(alg, u));

    std::unordered_set<CliffordElement<K>> seen;
    std::vector<CliffordElement<K>> gamma;
    auto one = CliffordElement<K>::scalar(alg, K(1));
    seen.insert(one);
    gamma.push_back(one);
    for (size_t head = 0; head < gamma.size(); ++head) {
        for (auto& g : gens) {
            auto x = gamma[head] * g;
            if (seen.insert(x).second) {
                if (gamma.size() >= opt.budget) throw BudgetError("Clifford enumeration budget exceeded");
                gamma.push_back(std::move(x));
            }
        }
    }
    Enumeration<K> out;
    out.id = id;
    out.nodes = gamma.size();
    // The breadth-first closure is closed under right multiplication by the
    // generators; sample products of arbitrary pairs as a cross-check.
    std::mt19937_64 rng(gamma.size());
    for (size_t s = 0; s < opt.closure_samples && !gamma.empty(); ++s) {
        auto& a = gamma[rng() % gamma.size()];
        auto& c = gamma[rng() % gamma.size()];
        if (!seen.count(a * c)) {
            out.closed = false;
            break;
        }
    }
    for (auto& x : gamma) {
        switch (id.family) {
        case Family::Gamma: out.clifford.push_back(x); break;
        case Family::SGamma:
            if (x.is_even()) out.clifford.push_back(x);
            break;
        case Family::Pin:
            if (spinor_norm(x) == K(1)) out.clifford.push_back(x);
            break;
        case Family::Spin:
            if (x.is_even() && spinor_norm(x) == K(1)) out.clifford.push_back(x);
            break;
        default: throw UnsupportedCase("not a Clifford family: " + id.str());
        }
    }
    return out;
}

template <FiniteRing K>
Enumeration<K> enumerate(const ClassicalGroup<K>& group, const EnumerationOptions& opt = {}) {
    if (is_clifford_family(group.id().family)) return enumerate_clifford_group(group, opt);
    return enumerate_matrix_group(group, opt);
}

} // namespace cgs
