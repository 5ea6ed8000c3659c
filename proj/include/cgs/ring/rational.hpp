#pragma once
#include <gmpxx.h>

#include <functional>
#include <string>

#include "cgs/errors.hpp"
#include "cgs/ring/integer.hpp"

namespace cgs {

// Always in lowest terms with positive denominator.
class Rational {
public:
    static constexpr bool is_field = true;
    static constexpr long characteristic = 0;

    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw NotInvertible("zero denominator");
        v_.canonicalize();
    }
    Rational(const Integer& i) : v_(i.value()) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    Integer num() const { return Integer(mpz_class(v_.get_num())); }
    Integer den() const { return Integer(mpz_class(v_.get_den())); }
    bool is_integer() const { return v_.get_den() == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inv(); }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend auto operator<=>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <=> 0; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_unit() const { return !is_zero(); }
    Rational inv() const {
        if (is_zero()) throw NotInvertible("rational zero has no inverse");
        return Rational(mpq_class(1 / v_));
    }

    static Rational from_rational(const Rational& r) { return r; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

} // namespace cgs

template <>
struct std::hash<cgs::Rational> {
    size_t operator()(const cgs::Rational& x) const { return std::hash<std::string>{}(x.str()); }
};
