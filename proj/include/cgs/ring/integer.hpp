#pragma once
#include <gmpxx.h>

#include <functional>
#include <string>

#include "cgs/errors.hpp"

namespace cgs {

class Integer {
public:
    static constexpr bool is_field = false;
    static constexpr long characteristic = 0;

    Integer() = default;
    Integer(long v) : v_(v) {}
    explicit Integer(mpz_class v) : v_(std::move(v)) {}
    explicit Integer(const std::string& s) : v_(s) {}

    const mpz_class& value() const { return v_; }

    friend Integer operator+(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ + b.v_)); }
    friend Integer operator-(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ - b.v_)); }
    friend Integer operator*(const Integer& a, const Integer& b) { return Integer(mpz_class(a.v_ * b.v_)); }
    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) <=> 0; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_unit() const { return v_ == 1 || v_ == -1; }
    Integer inv() const {
        if (!is_unit()) throw NotInvertible("integer " + str() + " is not a unit");
        return *this;
    }
    Integer abs() const { return Integer(mpz_class(::abs(v_))); }
    int sign() const { return sgn(v_); }
    long to_long() const { return v_.get_si(); }
    bool fits_long() const { return v_.fits_slong_p(); }

    // Floor division and remainder with 0 <= r < |b|.
    static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
        if (b.is_zero()) throw NotInvertible("division by zero");
        mpz_fdiv_qr(q.v_.get_mpz_t(), r.v_.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        if (r.v_ < 0) {
            r.v_ += ::abs(b.v_);
            q.v_ += (b.v_ > 0 ? -1 : 1);
        }
    }
    static Integer gcd(const Integer& a, const Integer& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
        return Integer(g);
    }

    std::string str() const { return v_.get_str(); }

private:
    mpz_class v_;
};

} // namespace cgs

template <>
struct std::hash<cgs::Integer> {
    size_t operator()(const cgs::Integer& x) const { return std::hash<std::string>{}(x.str()); }
};
