#pragma once
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/quadform.hpp"

namespace cgs {

// Form specs: `hyp:<m>`, `diag:a1,a2,...`, `bin:a,b`, and orthogonal sums
// of these joined by '+'. Coefficients are integers mapped into R.
struct FormSpecTerm {
    std::string kind;
    std::vector<long> args;
};

namespace detail {

inline long parse_long(std::string_view s, const std::string& whole) {
    long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw UsageError("malformed form-spec '" + whole + "': '" + std::string(s) + "' is not an integer");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    for (size_t k = 0; k <= s.size(); ++k)
        if (k == s.size() || s[k] == sep) {
            out.push_back(s.substr(start, k - start));
            start = k + 1;
        }
    return out;
}

} // namespace detail

inline std::vector<FormSpecTerm> parse_form_spec_terms(const std::string& spec) {
    std::vector<FormSpecTerm> terms;
    for (auto part : detail::split(spec, '+')) {
        auto colon = part.find(':');
        if (colon == std::string_view::npos)
            throw UsageError("malformed form-spec '" + spec + "': expected kind:args in '" + std::string(part) + "'");
        FormSpecTerm t{std::string(part.substr(0, colon)), {}};
        for (auto a : detail::split(part.substr(colon + 1), ',')) t.args.push_back(detail::parse_long(a, spec));
        if (t.kind == "hyp") {
            if (t.args.size() != 1 || t.args[0] < 1) throw UsageError("malformed form-spec '" + spec + "': hyp takes one rank >= 1");
        } else if (t.kind == "bin") {
            if (t.args.size() != 2) throw UsageError("malformed form-spec '" + spec + "': bin takes two coefficients");
        } else if (t.kind != "diag") {
            throw UsageError("malformed form-spec '" + spec + "': unknown kind '" + t.kind + "'");
        }
        terms.push_back(std::move(t));
    }
    return terms;
}

template <Ring R>
QuadraticModule<R> parse_form_spec(const std::string& spec) {
    std::optional<QuadraticModule<R>> q;
    for (auto& t : parse_form_spec_terms(spec)) {
        QuadraticModule<R> piece;
        if (t.kind == "hyp") {
            piece = hyperbolic<R>(size_t(t.args[0]));
        } else if (t.kind == "bin") {
            piece = binary_form(R(t.args[0]), R(t.args[1]));
        } else {
            std::vector<R> d;
            for (long a : t.args) d.push_back(R(a));
            piece = diagonal_form(d);
        }
        q = q ? orthogonal_sum(*q, piece) : piece;
    }
    return *q;
}

} // namespace cgs
