#pragma once
#include "cgs/errors.hpp"
#include "cgs/ring/concepts.hpp"
#include "cgs/ring/rational.hpp"

namespace cgs {

inline bool is_square(const Integer& x) {
    return x.sign() >= 0 && mpz_perfect_square_p(x.value().get_mpz_t()) != 0;
}

inline bool is_square(const Rational& x) { return is_square(x.num()) && is_square(x.den()); }

template <FiniteRing K>
bool is_square(const K& x) {
    for (const K& y : K::elements())
        if (y * y == x) return true;
    return false;
}

// Whether x^2 - b x - a has a root in K.
template <Field K>
bool quadratic_has_root(const K& a, const K& b) {
    if constexpr (FiniteRing<K>) {
        for (const K& y : K::elements())
            if (y * y - b * y - a == K()) return true;
        return false;
    } else if constexpr (std::is_same_v<K, Rational>) {
        return is_square(b * b + Rational(4) * a);
    } else {
        throw UnsupportedRing("root test needs a finite field or the rationals");
    }
}

} // namespace cgs
