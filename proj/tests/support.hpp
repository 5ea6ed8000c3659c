#pragma once
#include <random>

#include "cgs/exactring.hpp"

namespace testing_support {

using namespace cgs;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240917);
    return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

template <class R>
R random_element();

template <>
inline Integer random_element<Integer>() { return Integer(rand_int(-50, 50)); }
template <>
inline Rational random_element<Rational>() {
    long d = rand_int(1, 9);
    return Rational(rand_int(-20, 20), d);
}
template <>
inline F2 random_element<F2>() { return F2(rand_int(0, 1)); }
template <>
inline F3 random_element<F3>() { return F3(rand_int(0, 2)); }
template <>
inline F5 random_element<F5>() { return F5(rand_int(0, 4)); }
template <>
inline Zmod<12> random_element<Zmod<12>>() { return Zmod<12>(rand_int(0, 11)); }
template <>
inline Dual<Rational> random_element<Dual<Rational>>() {
    return Dual<Rational>(random_element<Rational>(), random_element<Rational>());
}
template <>
inline Tangent<Rational> random_element<Tangent<Rational>>() {
    Tangent<Rational> t(random_element<Rational>());
    for (int k = 0; k < 3; ++k) t += Tangent<Rational>::var(uint32_t(rand_int(0, 5)), random_element<Rational>());
    return t;
}
template <>
inline Laurent random_element<Laurent>() {
    Laurent p;
    int terms = int(rand_int(0, 3));
    for (int k = 0; k < terms; ++k)
        p += Laurent::monomial({int(rand_int(-2, 2)), int(rand_int(-2, 2))}, Rational(rand_int(-3, 3)));
    return p;
}

template <class R>
Vec<R> random_vector(size_t n) {
    Vec<R> v(n);
    for (auto& x : v) x = random_element<R>();
    return v;
}

template <class R>
Matrix<R> random_matrix(size_t r, size_t c) {
    Matrix<R> m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = random_element<R>();
    return m;
}

} // namespace testing_support
