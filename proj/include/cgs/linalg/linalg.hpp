#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/linalg/matrix.hpp"
#include "cgs/ring/integer.hpp"
#include "cgs/ring/rational.hpp"

namespace cgs {

// Division-free determinant (Berkowitz); works over any commutative ring.
template <Ring R>
R det_berkowitz(const Matrix<R>& a) {
    if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
    size_t n = a.rows();
    if (n == 0) return R(1);
    std::vector<R> v{R(1), -a(0, 0)};
    for (size_t r = 1; r < n; ++r) {
        // t = [1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C]
        std::vector<R> t{R(1), -a(r, r)};
        std::vector<R> col(r);
        for (size_t i = 0; i < r; ++i) col[i] = a(i, r);
        for (size_t k = 0; k < r; ++k) {
            R s;
            for (size_t j = 0; j < r; ++j) s += a(r, j) * col[j];
            t.push_back(-s);
            std::vector<R> next(r);
            for (size_t i = 0; i < r; ++i)
                for (size_t j = 0; j < r; ++j) next[i] += a(i, j) * col[j];
            col = std::move(next);
        }
        std::vector<R> nv(r + 2);
        for (size_t i = 0; i < r + 2; ++i)
            for (size_t j = 0; j <= std::min(i, r); ++j) nv[i] += t[i - j] * v[j];
        v = std::move(nv);
    }
    return (n % 2 == 0) ? v[n] : -v[n];
}

template <Ring R>
R det(const Matrix<R>& a) {
    if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
    if constexpr (R::is_field) {
        Matrix<R> m = a;
        size_t n = m.rows();
        R d(1);
        for (size_t c = 0; c < n; ++c) {
            size_t p = c;
            while (p < n && m(p, c).is_zero()) ++p;
            if (p == n) return R();
            if (p != c) {
                for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d = d * m(c, c);
            R inv = m(c, c).inv();
            for (size_t i = c + 1; i < n; ++i) {
                if (m(i, c).is_zero()) continue;
                R f = m(i, c) * inv;
                for (size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
            }
        }
        return d;
    } else {
        return det_berkowitz(a);
    }
}

namespace detail {

// Gauss-Jordan with unit pivots. Succeeds over fields and local rings
// (tangent and dual numbers); returns nullopt when no unit pivot exists.
template <Ring R>
std::optional<Matrix<R>> gauss_jordan_inverse(const Matrix<R>& a) {
    size_t n = a.rows();
    Matrix<R> m = a, inv = Matrix<R>::identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && !m(p, c).is_unit()) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        R pinv = m(c, c).inv();
        for (size_t j = 0; j < n; ++j) {
            m(c, j) = m(c, j) * pinv;
            inv(c, j) = inv(c, j) * pinv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            R f = m(i, c);
            for (size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

} // namespace detail

template <Ring R>
Matrix<R> adjugate(const Matrix<R>& a) {
    size_t n = a.rows();
    Matrix<R> adj(n, n);
    if (n == 1) {
        adj(0, 0) = R(1);
        return adj;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Matrix<R> minor(n - 1, n - 1);
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = a(r, c);
                }
                ++rr;
            }
            R d = det_berkowitz(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

template <Ring R>
Matrix<R> inverse(const Matrix<R>& a) {
    if (!a.square()) throw DimensionMismatch("inverse of a non-square matrix");
    if (auto gj = detail::gauss_jordan_inverse(a)) return *gj;
    if constexpr (R::is_field) {
        throw NotInvertible("singular matrix");
    } else {
        R d = det_berkowitz(a);
        if (!d.is_unit()) throw NotInvertible("determinant " + d.str() + " is not a unit");
        return d.inv() * adjugate(a);
    }
}

template <Ring R>
bool is_invertible(const Matrix<R>& a) {
    return a.square() && det(a).is_unit();
}

template <Ring K>
struct RrefResult {
    Matrix<K> reduced;
    size_t rank = 0;
    std::vector<size_t> pivot_columns;
    std::vector<Vec<K>> kernel_basis;
};

// Reduced row echelon form with kernel basis (one vector per free column).
template <Ring K>
RrefResult<K> rref(const Matrix<K>& a) {
    if constexpr (!K::is_field) {
        throw UnsupportedRing("rref needs a field instance");
    } else {
        RrefResult<K> res;
        Matrix<K> m = a;
        size_t rows = m.rows(), cols = m.cols(), r = 0;
        for (size_t c = 0; c < cols && r < rows; ++c) {
            size_t p = r;
            while (p < rows && m(p, c).is_zero()) ++p;
            if (p == rows) continue;
            if (p != r)
                for (size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
            K inv = m(r, c).inv();
            for (size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
            for (size_t i = 0; i < rows; ++i) {
                if (i == r || m(i, c).is_zero()) continue;
                K f = m(i, c);
                for (size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
            }
            res.pivot_columns.push_back(c);
            ++r;
        }
        res.rank = r;
        std::vector<bool> is_pivot(cols, false);
        for (size_t c : res.pivot_columns) is_pivot[c] = true;
        for (size_t f = 0; f < cols; ++f) {
            if (is_pivot[f]) continue;
            Vec<K> v(cols);
            v[f] = K(1);
            for (size_t i = 0; i < res.pivot_columns.size(); ++i) v[res.pivot_columns[i]] = -m(i, f);
            res.kernel_basis.push_back(std::move(v));
        }
        res.reduced = std::move(m);
        return res;
    }
}

template <Field K>
size_t rank(const Matrix<K>& a) {
    return rref(a).rank;
}

// Some solution of a x = b, or nullopt.
template <Field K>
std::optional<Vec<K>> solve(const Matrix<K>& a, const Vec<K>& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length");
    Matrix<K> aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto r = rref(aug);
    if (!r.pivot_columns.empty() && r.pivot_columns.back() == a.cols()) return std::nullopt;
    Vec<K> x(a.cols());
    for (size_t i = 0; i < r.pivot_columns.size(); ++i) x[r.pivot_columns[i]] = r.reduced(i, a.cols());
    return x;
}

// Incremental sparse row reduction over a field, for large sparse systems.
template <Field K>
class SparseEchelon {
public:
    using Row = std::map<size_t, K>;

    explicit SparseEchelon(size_t cols) : cols_(cols) {}

    size_t cols() const { return cols_; }
    size_t rank() const { return pivots_.size(); }

    // Reduces the row against the stored pivots; returns true if it was independent.
    bool add(Row row) {
        reduce(row);
        if (row.empty()) return false;
        auto lead = row.begin()->first;
        K inv = row.begin()->second.inv();
        for (auto& [c, v] : row) v = v * inv;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    void reduce(Row& row) const {
        auto it = row.begin();
        while (it != row.end()) {
            auto p = pivots_.find(it->first);
            if (p == pivots_.end()) {
                ++it;
                continue;
            }
            K f = it->second;
            size_t col = it->first;
            for (auto& [c, v] : p->second) {
                auto [slot, inserted] = row.try_emplace(c, K());
                slot->second -= f * v;
                if (slot->second.is_zero()) row.erase(slot);
            }
            it = row.upper_bound(col);
        }
    }

    bool contains(Row row) const {
        reduce(row);
        return row.empty();
    }

    // Kernel of the accumulated rows, one vector per free column, in the same
    // normalization as rref().
    std::vector<Vec<K>> kernel() {
        back_substitute();
        std::vector<Vec<K>> out;
        for (size_t f = 0; f < cols_; ++f) {
            if (pivots_.count(f)) continue;
            Vec<K> v(cols_);
            v[f] = K(1);
            for (auto& [p, row] : pivots_) {
                auto it = row.find(f);
                if (it != row.end()) v[p] = -it->second;
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    std::vector<size_t> pivot_columns() const {
        std::vector<size_t> out;
        for (auto& [p, row] : pivots_) out.push_back(p);
        return out;
    }

private:
    void back_substitute() {
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Row& row = it->second;
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto e = std::next(row.begin()); e != row.end(); ++e) {
                    auto p = pivots_.find(e->first);
                    if (p == pivots_.end() || &p->second == &row) continue;
                    K f = e->second;
                    for (auto& [c, v] : p->second) {
                        auto [slot, inserted] = row.try_emplace(c, K());
                        slot->second -= f * v;
                        if (slot->second.is_zero()) row.erase(slot);
                    }
                    changed = true;
                    break;
                }
            }
        }
    }

    size_t cols_;
    std::map<size_t, Row> pivots_;
};

// Integer matrix inverse via the rationals; the result must be integral.
inline Matrix<Integer> integer_inverse(const Matrix<Integer>& a) {
    auto q = a.map([](const Integer& x) { return Rational(x); });
    auto qi = inverse(q);
    return qi.map([](const Rational& x) {
        if (!x.is_integer()) throw NotInvertible("matrix is not unimodular");
        return x.num();
    });
}

} // namespace cgs
