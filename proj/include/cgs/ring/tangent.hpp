#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/ring/concepts.hpp"

namespace cgs {

// base + t * (sum_k lin_k B_k): the dual numbers with a formal vector of
// tangent variables B_k. Anything of degree >= 2 in the B_k is dropped.
template <Ring R>
class Tangent {
public:
    using Lin = std::vector<std::pair<uint32_t, R>>;  // sorted by variable, no zeros
    static constexpr bool is_field = false;
    static constexpr long characteristic = R::characteristic;

    Tangent() = default;
    Tangent(long v) : base_(v) {}
    Tangent(R base) : base_(std::move(base)) {}
    Tangent(R base, Lin lin) : base_(std::move(base)), lin_(std::move(lin)) { prune(); }

    static Tangent var(uint32_t k, R c = R(1)) {
        Tangent t;
        if (!c.is_zero()) t.lin_.emplace_back(k, std::move(c));
        return t;
    }

    const R& base() const { return base_; }
    const Lin& lin() const { return lin_; }
    R coeff(uint32_t k) const {
        for (auto& [v, c] : lin_)
            if (v == k) return c;
        return R();
    }

    friend Tangent operator+(const Tangent& x, const Tangent& y) {
        Tangent r(x.base_ + y.base_);
        r.lin_ = merge(x.lin_, R(1), y.lin_, R(1));
        return r;
    }
    friend Tangent operator-(const Tangent& x, const Tangent& y) {
        Tangent r(x.base_ - y.base_);
        r.lin_ = merge(x.lin_, R(1), y.lin_, R(-1));
        return r;
    }
    friend Tangent operator*(const Tangent& x, const Tangent& y) {
        bool xz = x.base_.is_zero(), yz = y.base_.is_zero();
        if (xz && yz) return Tangent();
        Tangent r(x.base_ * y.base_);
        if (xz) r.lin_ = scale(x.lin_, y.base_);
        else if (yz) r.lin_ = scale(y.lin_, x.base_);
        else r.lin_ = merge(x.lin_, y.base_, y.lin_, x.base_);
        return r;
    }
    Tangent operator-() const { return Tangent(-base_, scale(lin_, R(-1))); }
    Tangent& operator+=(const Tangent& o) { return *this = *this + o; }
    Tangent& operator-=(const Tangent& o) { return *this = *this - o; }
    Tangent& operator*=(const Tangent& o) { return *this = *this * o; }
    friend bool operator==(const Tangent&, const Tangent&) = default;

    bool is_zero() const { return base_.is_zero() && lin_.empty(); }
    bool is_unit() const { return base_.is_unit(); }
    Tangent inv() const {
        R bi = base_.inv();
        return Tangent(bi, scale(lin_, -(bi * bi)));
    }

    std::string str() const {
        std::string s = base_.str();
        for (auto& [k, c] : lin_) s += " + t(" + c.str() + ")B" + std::to_string(k);
        return s;
    }

private:
    static Lin scale(const Lin& a, const R& s) {
        Lin out;
        if (s.is_zero()) return out;
        out.reserve(a.size());
        for (auto& [k, c] : a) {
            R v = c * s;
            if (!v.is_zero()) out.emplace_back(k, std::move(v));
        }
        return out;
    }
    static Lin merge(const Lin& a, const R& sa, const Lin& b, const R& sb) {
        Lin out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                R v = a[i].second * sa;
                if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
                ++i;
            } else if (i == a.size() || b[j].first < a[i].first) {
                R v = b[j].second * sb;
                if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
                ++j;
            } else {
                R v = a[i].second * sa + b[j].second * sb;
                if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
                ++i, ++j;
            }
        }
        return out;
    }
    void prune() {
        std::erase_if(lin_, [](auto& p) { return p.second.is_zero(); });
    }

    R base_{};
    Lin lin_;
};

} // namespace cgs
