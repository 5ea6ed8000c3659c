#pragma once
#include <atomic>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/linalg/linalg.hpp"
#include "cgs/quad/quadform.hpp"

namespace cgs {

template <Ring R>
class CliffordElement;

// C(q) on the subset basis e_S = e_{i1} ... e_{ik}, i1 < ... < ik, S a bitmask.
template <Ring R>
class CliffordAlgebra : public std::enable_shared_from_this<CliffordAlgebra<R>> {
public:
    using Terms = std::vector<std::pair<uint32_t, R>>;  // sorted by mask, no zeros

    static std::shared_ptr<const CliffordAlgebra> make(QuadraticModule<R> q) {
        return std::shared_ptr<const CliffordAlgebra>(new CliffordAlgebra(std::move(q)));
    }

    const QuadraticModule<R>& form() const { return q_; }
    size_t rank() const { return q_.rank(); }
    uint32_t dimension() const { return uint32_t(1) << rank(); }

    // e_U * e_V, memoized.
    const Terms& basis_product(uint32_t u, uint32_t v) const {
        if (dense_) {
            auto& slot = dense_table_[size_t(u) * dimension() + v];
            if (Terms* t = slot.load(std::memory_order_acquire)) return *t;
            auto fresh = std::make_unique<Terms>(compute_product(u, v));
            Terms* expected = nullptr;
            if (slot.compare_exchange_strong(expected, fresh.get(), std::memory_order_acq_rel)) {
                std::lock_guard lk(mu_);
                owned_.push_back(std::move(fresh));
                return *slot.load(std::memory_order_acquire);
            }
            return *expected;
        }
        uint64_t key = (uint64_t(u) << 32) | v;
        {
            std::lock_guard lk(mu_);
            auto it = sparse_table_.find(key);
            if (it != sparse_table_.end()) return it->second;
        }
        Terms t = compute_product(u, v);
        std::lock_guard lk(mu_);
        return sparse_table_.try_emplace(key, std::move(t)).first->second;
    }

    // Reversed product e_{ik} ... e_{i1}.
    Terms reversed(uint32_t s) const {
        Terms acc{{0u, R(1)}};
        for (int i = int(rank()) - 1; i >= 0; --i)
            if (s >> i & 1u) acc = times_generator(acc, uint32_t(i));
        return acc;
    }

private:
    explicit CliffordAlgebra(QuadraticModule<R> q) : q_(std::move(q)), gram_(q_.gram()) {
        if (rank() > 30) throw UnsupportedCase("Clifford rank too large");
        dense_ = rank() <= 10;
        if (dense_) dense_table_ = std::vector<std::atomic<Terms*>>(size_t(dimension()) * dimension());
    }

    // e_U * e_k
    Terms mul_gen(uint32_t u, uint32_t k) const {
        if (u == 0) return {{1u << k, R(1)}};
        uint32_t m = 31 - uint32_t(std::countl_zero(u));
        if (k > m) return {{u | (1u << k), R(1)}};
        uint32_t up = u ^ (1u << m);
        if (k == m) {
            if (q_(m, m).is_zero()) return {};
            return {{up, q_(m, m)}};
        }
        // e_U e_k = b(k,m) e_{U'} - (e_{U'} e_k) e_m
        std::map<uint32_t, R> acc;
        if (!gram_(k, m).is_zero()) acc[up] += gram_(k, m);
        for (auto& [w, c] : mul_gen(up, k)) acc[w | (1u << m)] -= c;
        return to_terms(acc);
    }

    Terms times_generator(const Terms& x, uint32_t k) const {
        std::map<uint32_t, R> acc;
        for (auto& [u, c] : x)
            for (auto& [w, d] : mul_gen(u, k)) acc[w] += c * d;
        return to_terms(acc);
    }

    Terms compute_product(uint32_t u, uint32_t v) const {
        Terms acc{{u, R(1)}};
        for (uint32_t k = 0; k < rank(); ++k)
            if (v >> k & 1u) acc = times_generator(acc, k);
        return acc;
    }

    static Terms to_terms(const std::map<uint32_t, R>& m) {
        Terms t;
        for (auto& [k, v] : m)
            if (!v.is_zero()) t.emplace_back(k, v);
        return t;
    }

    QuadraticModule<R> q_;
    Matrix<R> gram_;
    bool dense_ = false;
    mutable std::vector<std::atomic<Terms*>> dense_table_;
    mutable std::vector<std::unique_ptr<Terms>> owned_;
    mutable std::unordered_map<uint64_t, Terms> sparse_table_;
    mutable std::mutex mu_;
};

template <Ring R>
using CliffordPtr = std::shared_ptr<const CliffordAlgebra<R>>;

template <Ring R>
class CliffordElement {
public:
    CliffordElement() = default;
    explicit CliffordElement(CliffordPtr<R> alg) : alg_(std::move(alg)) {}
    CliffordElement(CliffordPtr<R> alg, std::map<uint32_t, R> coeffs) : alg_(std::move(alg)), c_(std::move(coeffs)) { prune(); }

    static CliffordElement scalar(CliffordPtr<R> alg, const R& s) { return CliffordElement(alg, {{0u, s}}); }
    static CliffordElement basis(CliffordPtr<R> alg, uint32_t mask, const R& s = R(1)) { return CliffordElement(alg, {{mask, s}}); }
    static CliffordElement generator(CliffordPtr<R> alg, size_t i) { return basis(alg, uint32_t(1) << i); }
    static CliffordElement vector(CliffordPtr<R> alg, const Vec<R>& v) {
        std::map<uint32_t, R> c;
        for (size_t i = 0; i < v.size(); ++i) c[uint32_t(1) << i] = v[i];
        return CliffordElement(alg, std::move(c));
    }
    // Product e_{i1} e_{i2} ... in the given (arbitrary) order.
    static CliffordElement word(CliffordPtr<R> alg, std::initializer_list<size_t> idx) {
        CliffordElement x = scalar(alg, R(1));
        for (size_t i : idx) x = x * generator(alg, i);
        return x;
    }

    const CliffordPtr<R>& algebra() const { return alg_; }
    const std::map<uint32_t, R>& coeffs() const { return c_; }
    R coeff(uint32_t mask) const {
        auto it = c_.find(mask);
        return it == c_.end() ? R() : it->second;
    }
    bool is_zero() const { return c_.empty(); }
    bool is_scalar() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    bool is_homogeneous() const {
        int p = -1;
        for (auto& [m, v] : c_) {
            int q = std::popcount(m) & 1;
            if (p >= 0 && p != q) return false;
            p = q;
        }
        return true;
    }
    bool is_even() const {
        for (auto& [m, v] : c_)
            if (std::popcount(m) & 1) return false;
        return true;
    }
    bool is_odd() const {
        for (auto& [m, v] : c_)
            if (!(std::popcount(m) & 1)) return false;
        return true;
    }
    // Homogeneous component of the given parity (0 even, 1 odd).
    CliffordElement part(int parity) const {
        std::map<uint32_t, R> c;
        for (auto& [m, v] : c_)
            if ((std::popcount(m) & 1) == parity) c.emplace(m, v);
        return CliffordElement(alg_, std::move(c));
    }
    // Coordinates on span(e_1..e_n), or nullopt if other components appear.
    std::optional<Vec<R>> as_vector() const {
        Vec<R> v(alg_->rank());
        for (auto& [m, x] : c_) {
            if (std::popcount(m) != 1) return std::nullopt;
            v[size_t(std::countr_zero(m))] = x;
        }
        return v;
    }

    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        CliffordElement r = a;
        if (!r.alg_) r.alg_ = b.alg_;
        for (auto& [m, v] : b.c_) r.c_[m] += v;
        r.prune();
        return r;
    }
    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        CliffordElement r = a;
        if (!r.alg_) r.alg_ = b.alg_;
        for (auto& [m, v] : b.c_) r.c_[m] -= v;
        r.prune();
        return r;
    }
    CliffordElement operator-() const {
        CliffordElement r = *this;
        for (auto& [m, v] : r.c_) v = -v;
        return r;
    }
    friend CliffordElement operator*(const R& s, const CliffordElement& a) {
        CliffordElement r = a;
        for (auto& [m, v] : r.c_) v = s * v;
        r.prune();
        return r;
    }
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        check_same(a, b);
        auto alg = a.alg_ ? a.alg_ : b.alg_;
        std::map<uint32_t, R> acc;
        for (auto& [u, x] : a.c_)
            for (auto& [v, y] : b.c_) {
                R xy = x * y;
                if (xy.is_zero()) continue;
                for (auto& [w, z] : alg->basis_product(u, v)) acc[w] += xy * z;
            }
        return CliffordElement(alg, std::move(acc));
    }
    CliffordElement& operator+=(const CliffordElement& o) { return *this = *this + o; }
    CliffordElement& operator-=(const CliffordElement& o) { return *this = *this - o; }
    CliffordElement& operator*=(const CliffordElement& o) { return *this = *this * o; }
    friend bool operator==(const CliffordElement& a, const CliffordElement& b) { return a.c_ == b.c_; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto& [m, v] : c_) {
            if (!s.empty()) s += " + ";
            s += v.str();
            if (m) {
                s += "*e";
                bool first = true;
                for (uint32_t i = 0; i < 32; ++i)
                    if (m >> i & 1u) {
                        s += (first ? "" : ".") + std::to_string(i);
                        first = false;
                    }
            }
        }
        return s;
    }

private:
    static void check_same(const CliffordElement& a, const CliffordElement& b) {
        if (a.alg_ && b.alg_ && a.alg_ != b.alg_ && !(a.alg_->form() == b.alg_->form()))
            throw AlgebraMismatch("elements of different Clifford algebras");
    }
    void prune() {
        std::erase_if(c_, [](auto& p) { return p.second.is_zero(); });
    }

    CliffordPtr<R> alg_;
    std::map<uint32_t, R> c_;
};

template <Ring R>
CliffordElement<R> cmul(const CliffordElement<R>& a, const CliffordElement<R>& b) {
    return a * b;
}

// Anti-automorphism with sigma(v) = -v on vectors.
template <Ring R>
CliffordElement<R> standard_involution(const CliffordElement<R>& x) {
    std::map<uint32_t, R> acc;
    for (auto& [m, v] : x.coeffs()) {
        R sign = (std::popcount(m) & 1) ? R(-1) : R(1);
        for (auto& [w, c] : x.algebra()->reversed(m)) acc[w] += sign * v * c;
    }
    return CliffordElement<R>(x.algebra(), std::move(acc));
}

// C(g): the algebra map induced by e_i -> g(e_i).
template <Ring R>
CliffordElement<R> apply_orthogonal(const Matrix<R>& g, const CliffordElement<R>& x) {
    auto alg = x.algebra();
    size_t n = alg->rank();
    std::vector<CliffordElement<R>> images;
    for (size_t i = 0; i < n; ++i) images.push_back(CliffordElement<R>::vector(alg, g.column(i)));
    CliffordElement<R> out(alg);
    for (auto& [m, v] : x.coeffs()) {
        CliffordElement<R> t = CliffordElement<R>::scalar(alg, v);
        for (size_t i = 0; i < n; ++i)
            if (m >> i & 1u) t = t * images[i];
        out += t;
    }
    return out;
}

// Left multiplication by x on coordinates.
template <Ring R>
Matrix<R> left_multiplication_matrix(const CliffordElement<R>& x) {
    auto alg = x.algebra();
    uint32_t d = alg->dimension();
    Matrix<R> m(d, d);
    for (uint32_t s = 0; s < d; ++s) {
        auto y = x * CliffordElement<R>::basis(alg, s);
        for (auto& [w, c] : y.coeffs()) m(w, s) = c;
    }
    return m;
}

// Inverse by solving x y = 1 over a field.
template <Field K>
std::optional<CliffordElement<K>> clifford_inverse(const CliffordElement<K>& x) {
    auto alg = x.algebra();
    uint32_t d = alg->dimension();
    Vec<K> one(d);
    one[0] = K(1);
    auto sol = solve(left_multiplication_matrix(x), one);
    if (!sol) return std::nullopt;
    std::map<uint32_t, K> c;
    for (uint32_t s = 0; s < d; ++s) c[s] = (*sol)[s];
    CliffordElement<K> y(alg, std::move(c));
    if (!(y * x).is_scalar() || (y * x).coeff(0) != K(1)) return std::nullopt;
    return y;
}

template <Ring R>
CliffordPtr<R> clifford_algebra(const QuadraticModule<R>& q) {
    return CliffordAlgebra<R>::make(q);
}

} // namespace cgs
