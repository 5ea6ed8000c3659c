#pragma once
#include <concepts>
#include <string>

namespace cgs {

// Commutative unital ring with exact equality.
template <class R>
concept Ring = std::regular<R> && std::constructible_from<R, long> && requires(R a, R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_unit() } -> std::convertible_to<bool>;
    { a.inv() } -> std::convertible_to<R>;
    { a.str() } -> std::convertible_to<std::string>;
    { R::is_field } -> std::convertible_to<bool>;
    { R::characteristic } -> std::convertible_to<long>;
};

template <class R>
concept Field = Ring<R> && R::is_field;

// Ring with a finite list of elements (the prime fields used by enumerations).
template <class R>
concept FiniteRing = Ring<R> && requires { { R::elements() }; { R::order } -> std::convertible_to<long>; };

template <Ring R>
R pow(R base, long e) {
    if (e < 0) {
        base = base.inv();
        e = -e;
    }
    R acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace cgs
