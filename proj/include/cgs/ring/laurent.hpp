#pragma once
#include <map>
#include <string>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/ring/concepts.hpp"
#include "cgs/ring/rational.hpp"

namespace cgs {

// Laurent polynomials over Q in any number of variables t_0, t_1, ...
// Exponent vectors are stored with trailing zeros trimmed.
class Laurent {
public:
    using Exp = std::vector<int>;
    static constexpr bool is_field = false;
    static constexpr long characteristic = 0;

    Laurent() = default;
    Laurent(long c) { add(Exp{}, Rational(c)); }
    Laurent(const Rational& c) { add(Exp{}, c); }

    static Laurent monomial(Exp e, Rational c = Rational(1)) {
        Laurent p;
        p.add(std::move(e), c);
        return p;
    }
    static Laurent var(size_t i, int power = 1) {
        Exp e(i + 1, 0);
        e[i] = power;
        return monomial(std::move(e));
    }

    const std::map<Exp, Rational>& terms() const { return terms_; }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [e, c] : b.terms_) r.add(e, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [e, c] : b.terms_) r.add(e, -c);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add(sum(ea, eb), ca * cb);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    friend bool operator==(const Laurent&, const Laurent&) = default;

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // The units are exactly the nonzero monomials.
    bool is_unit() const { return is_monomial(); }
    Laurent inv() const {
        if (!is_monomial()) throw NotInvertible("Laurent element " + str() + " is not a monomial");
        auto& [e, c] = *terms_.begin();
        Exp ne(e.size());
        for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
        return monomial(ne, c.inv());
    }

    // Exponent vector padded to nvars; requires a monomial.
    Exp exponent(size_t nvars) const {
        if (!is_monomial()) throw DecompositionError("not a monomial: " + str());
        Exp e = terms_.begin()->first;
        e.resize(std::max(nvars, e.size()), 0);
        return e;
    }
    Rational leading_coeff() const { return terms_.empty() ? Rational() : terms_.begin()->second; }

    // t_i -> t_i^{-1} for every variable.
    Laurent invert_variables() const {
        Laurent r;
        for (auto& [e, c] : terms_) {
            Exp ne(e.size());
            for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
            r.terms_.emplace(std::move(ne), c);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str();
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) s += "*t" + std::to_string(i) + (e[i] == 1 ? "" : "^" + std::to_string(e[i]));
        }
        return s;
    }

private:
    static Exp sum(const Exp& a, const Exp& b) {
        Exp r(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
        return r;
    }
    void add(Exp e, const Rational& c) {
        while (!e.empty() && e.back() == 0) e.pop_back();
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Exp, Rational> terms_;
};

// Substitution homomorphism t_i -> point[i] into a field-like target ring.
template <Ring S>
S laurent_eval(const Laurent& p, const std::vector<S>& point) {
    S acc;
    for (auto& [e, c] : p.terms()) {
        S term = S::from_rational(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= point.size()) throw DimensionMismatch("Laurent evaluation point too short");
            if (e[i] < 0 && !point[i].is_unit())
                throw NotInvertible("coordinate t" + std::to_string(i) + " is not invertible");
            term = term * pow(point[i], e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace cgs
