#pragma once
#include <deque>
#include <unordered_map>
#include <vector>

#include "cgs/quad/quadform.hpp"

namespace cgs {

// All vectors of K^n for a finite field K, in lexicographic order.
template <FiniteRing K>
std::vector<Vec<K>> all_vectors(size_t n) {
    std::vector<Vec<K>> out;
    auto elems = K::elements();
    std::vector<size_t> idx(n, 0);
    while (true) {
        Vec<K> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = elems[idx[i]];
        out.push_back(std::move(v));
        size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < elems.size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

// Breadth-first search of the group generated by the reflections of q over a
// finite field. Gives shortest reflection words for every reachable element.
template <FiniteRing K>
class ReflectionSearch {
public:
    ReflectionSearch(const QuadraticModule<K>& q, size_t budget = 2'000'000) : q_(q) {
        for (auto& v : all_vectors<K>(q.rank())) {
            K qv = q.value(v);
            if (!qv.is_unit()) continue;
            // one representative per line: first nonzero coordinate equal to 1
            size_t k = 0;
            while (v[k].is_zero()) ++k;
            if (v[k] != K(1)) continue;
            vectors_.push_back(v);
            reflections_.push_back(reflection(q, v));
        }
        auto id = Matrix<K>::identity(q.rank());
        tree_.emplace(id, Node{id, -1});
        std::deque<Matrix<K>> frontier{id};
        while (!frontier.empty()) {
            auto g = std::move(frontier.front());
            frontier.pop_front();
            for (size_t r = 0; r < reflections_.size(); ++r) {
                Matrix<K> h = g * reflections_[r];
                if (tree_.count(h)) continue;
                if (tree_.size() >= budget) throw BudgetError("reflection group search exceeded budget");
                tree_.emplace(h, Node{g, long(r)});
                frontier.push_back(std::move(h));
            }
        }
    }

    size_t group_size() const { return tree_.size(); }
    bool contains(const Matrix<K>& g) const { return tree_.count(g) > 0; }

    // v_1, ..., v_k with g = tau_{v_1} ... tau_{v_k}, shortest possible.
    std::vector<Vec<K>> word(const Matrix<K>& g) const {
        auto it = tree_.find(g);
        if (it == tree_.end()) throw UnsupportedCase("element is not a product of reflections");
        std::vector<Vec<K>> rev;
        while (it->second.via >= 0) {
            rev.push_back(vectors_[size_t(it->second.via)]);
            it = tree_.find(it->second.parent);
        }
        return {rev.rbegin(), rev.rend()};
    }

    const std::vector<Matrix<K>>& reflections() const { return reflections_; }
    std::vector<Matrix<K>> elements() const {
        std::vector<Matrix<K>> out;
        for (auto& [m, n] : tree_) out.push_back(m);
        return out;
    }

private:
    struct Node {
        Matrix<K> parent;
        long via;
    };
    QuadraticModule<K> q_;
    std::vector<Vec<K>> vectors_;
    std::vector<Matrix<K>> reflections_;
    std::unordered_map<Matrix<K>, Node> tree_;
};

namespace detail {

// Away from characteristic 2, for b_q nondegenerate: repeatedly fix an
// anisotropic vector x in the orthogonal of the already fixed ones, using
// tau_{x-y} or tau_x tau_{x+y} with y = h(x).
template <Field K>
std::vector<Vec<K>> cartan_dieudonne_constructive(const QuadraticModule<K>& q, const Matrix<K>& g) {
    size_t n = q.rank();
    Matrix<K> b = q.gram();
    if (det(b).is_zero()) throw UnsupportedCase("constructive factorization needs a nondegenerate polar form");
    Matrix<K> h = g;
    std::vector<Vec<K>> applied, fixed;
    auto sub = [](const Vec<K>& x, const Vec<K>& y, K s) {
        Vec<K> r(x.size());
        for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + s * y[i];
        return r;
    };
    while (!h.is_identity()) {
        if (fixed.size() >= n) throw StructuralFailure("factorization did not terminate");
        std::vector<Vec<K>> w;
        if (fixed.empty()) {
            for (size_t i = 0; i < n; ++i) w.push_back(basis_vector<K>(n, i));
        } else {
            Matrix<K> cons(fixed.size(), n);
            for (size_t r = 0; r < fixed.size(); ++r) {
                Vec<K> bf = b * fixed[r];
                for (size_t j = 0; j < n; ++j) cons(r, j) = bf[j];
            }
            w = rref(cons).kernel_basis;
        }
        std::optional<Vec<K>> x;
        for (auto& u : w)
            if (!q.value(u).is_zero()) {
                x = u;
                break;
            }
        for (size_t i = 0; i < w.size() && !x; ++i)
            for (size_t j = i + 1; j < w.size() && !x; ++j)
                if (!q.polar(w[i], w[j]).is_zero()) x = sub(w[i], w[j], K(1));
        if (!x) throw StructuralFailure("no anisotropic vector in a nondegenerate subspace");
        Vec<K> y = h * *x;
        if (y != *x) {
            Vec<K> d = sub(*x, y, K(-1));
            if (!q.value(d).is_zero()) {
                h = reflection(q, d) * h;
                applied.push_back(d);
            } else {
                Vec<K> s = sub(*x, y, K(1));
                h = reflection(q, *x) * (reflection(q, s) * h);
                applied.push_back(s);
                applied.push_back(*x);
            }
        }
        fixed.push_back(*x);
    }
    return applied;  // g = tau_{a_1} tau_{a_2} ... tau_{a_k}
}

} // namespace detail

// Factor g in O(q) into reflections: g = tau_{v_1} ... tau_{v_k}, k <= 2 rank.
// Constructive away from characteristic 2; over finite fields of
// characteristic 2 (and as a fallback) an exhaustive shortest-word search.
template <Field K>
std::vector<Vec<K>> cartan_dieudonne(const QuadraticModule<K>& q, const Matrix<K>& g) {
    if (!in_orthogonal_group(q, g)) throw MembershipError("matrix is not in the orthogonal group");
    if constexpr (K::characteristic != 2) {
        try {
            auto vs = detail::cartan_dieudonne_constructive(q, g);
            if (product_of_reflections(q, vs) != g) throw StructuralFailure("reconstruction mismatch");
            return vs;
        } catch (const UnsupportedCase&) {
            if constexpr (!FiniteRing<K>) throw;
        }
    }
    if constexpr (FiniteRing<K>) {
        ReflectionSearch<K> search(q);
        return search.word(g);
    } else {
        throw UnsupportedCase("no factorization strategy for this field");
    }
}

} // namespace cgs
