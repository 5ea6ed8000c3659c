#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/ring/rational.hpp"

namespace cgs {

constexpr bool is_prime_number(unsigned long m) {
    if (m < 2) return false;
    for (unsigned long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

// Z/M. Composite moduli are allowed; inv() throws on non-units.
template <unsigned M>
class Zmod {
    static_assert(M >= 2);

public:
    static constexpr bool is_field = is_prime_number(M);
    static constexpr long characteristic = M;
    static constexpr long order = M;

    Zmod() = default;
    Zmod(long v) : v_(static_cast<uint32_t>(((v % long(M)) + long(M)) % long(M))) {}

    uint32_t value() const { return v_; }

    friend Zmod operator+(Zmod a, Zmod b) { return raw((a.v_ + b.v_) % M); }
    friend Zmod operator-(Zmod a, Zmod b) { return raw((a.v_ + M - b.v_) % M); }
    friend Zmod operator*(Zmod a, Zmod b) { return raw(uint32_t((uint64_t(a.v_) * b.v_) % M)); }
    friend Zmod operator/(Zmod a, Zmod b) { return a * b.inv(); }
    Zmod operator-() const { return raw((M - v_) % M); }
    Zmod& operator+=(Zmod o) { return *this = *this + o; }
    Zmod& operator-=(Zmod o) { return *this = *this - o; }
    Zmod& operator*=(Zmod o) { return *this = *this * o; }
    friend bool operator==(Zmod a, Zmod b) = default;
    friend auto operator<=>(Zmod a, Zmod b) = default;

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return gcd(v_, M) == 1; }
    Zmod inv() const {
        // extended Euclid
        long r0 = M, r1 = v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long q = r0 / r1;
            long t = r0 - q * r1; r0 = r1; r1 = t;
            t = s0 - q * s1; s0 = s1; s1 = t;
        }
        if (r0 != 1) throw NotInvertible(str() + " is not a unit mod " + std::to_string(M));
        return Zmod(s0);
    }

    static Zmod from_rational(const Rational& r) {
        Zmod n(long(mpz_fdiv_ui(r.num().value().get_mpz_t(), M)));
        Zmod d(long(mpz_fdiv_ui(r.den().value().get_mpz_t(), M)));
        return n * d.inv();
    }

    static std::vector<Zmod> elements() {
        std::vector<Zmod> out;
        for (unsigned i = 0; i < M; ++i) out.push_back(raw(i));
        return out;
    }

    std::string str() const { return std::to_string(v_); }

private:
    static constexpr uint32_t gcd(uint32_t a, uint32_t b) { return b == 0 ? a : gcd(b, a % b); }
    static Zmod raw(uint32_t v) { Zmod z; z.v_ = v; return z; }
    uint32_t v_ = 0;
};

using F2 = Zmod<2>;
using F3 = Zmod<3>;
using F5 = Zmod<5>;

} // namespace cgs

template <unsigned M>
struct std::hash<cgs::Zmod<M>> {
    size_t operator()(cgs::Zmod<M> x) const { return x.value(); }
};
