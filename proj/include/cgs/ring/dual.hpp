#pragma once
#include <string>

#include "cgs/errors.hpp"
#include "cgs/ring/concepts.hpp"

namespace cgs {

// R[t]/t^2, written a + b t.
template <Ring R>
class Dual {
public:
    static constexpr bool is_field = false;
    static constexpr long characteristic = R::characteristic;

    Dual() = default;
    Dual(long v) : a_(v) {}
    Dual(R a, R b = R()) : a_(std::move(a)), b_(std::move(b)) {}
    static Dual eps() { return Dual(R(0), R(1)); }
    template <class Q>
    static Dual from_rational(const Q& r) { return Dual(R::from_rational(r)); }

    const R& re() const { return a_; }
    const R& du() const { return b_; }

    friend Dual operator+(const Dual& x, const Dual& y) { return Dual(x.a_ + y.a_, x.b_ + y.b_); }
    friend Dual operator-(const Dual& x, const Dual& y) { return Dual(x.a_ - y.a_, x.b_ - y.b_); }
    friend Dual operator*(const Dual& x, const Dual& y) { return Dual(x.a_ * y.a_, x.a_ * y.b_ + x.b_ * y.a_); }
    Dual operator-() const { return Dual(-a_, -b_); }
    Dual& operator+=(const Dual& o) { return *this = *this + o; }
    Dual& operator-=(const Dual& o) { return *this = *this - o; }
    Dual& operator*=(const Dual& o) { return *this = *this * o; }
    friend bool operator==(const Dual&, const Dual&) = default;

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_unit() const { return a_.is_unit(); }
    Dual inv() const {
        R ai = a_.inv();
        return Dual(ai, -(b_ * ai * ai));
    }
    std::string str() const { return "(" + a_.str() + " + " + b_.str() + "t)"; }

private:
    R a_{}, b_{};
};

} // namespace cgs
