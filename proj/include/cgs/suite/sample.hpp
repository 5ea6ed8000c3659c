#pragma once
#include <random>

#include "cgs/quadform.hpp"

namespace cgs {

template <Ring K>
K sample_element(std::mt19937_64& g) {
    if constexpr (FiniteRing<K>) {
        static const auto elems = K::elements();
        return elems[std::uniform_int_distribution<size_t>(0, elems.size() - 1)(g)];
    } else {
        static_assert(std::is_same_v<K, Rational>, "sampling is defined for finite rings and Q");
        long num = std::uniform_int_distribution<long>(-20, 20)(g);
        long den = std::uniform_int_distribution<long>(1, 9)(g);
        return Rational(num, den);
    }
}

template <Ring K>
Vec<K> sample_vector(std::mt19937_64& g, size_t n) {
    Vec<K> v(n);
    for (auto& x : v) x = sample_element<K>(g);
    return v;
}

// A vector with q(v) a unit, so that tau_v is defined.
template <Field K>
Vec<K> sample_anisotropic(std::mt19937_64& g, const QuadraticModule<K>& q) {
    while (true) {
        auto v = sample_vector<K>(g, q.rank());
        if (q.value(v).is_unit()) return v;
    }
}

} // namespace cgs
