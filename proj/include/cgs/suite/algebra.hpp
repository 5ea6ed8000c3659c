#pragma once
#include <string>
#include <vector>

#include "cgs/clifford.hpp"
#include "cgs/exactring.hpp"
#include "cgs/lie.hpp"
#include "cgs/suite/runner.hpp"

namespace cgs {

template <Ring K>
std::string field_tag() {
    if constexpr (std::is_same_v<K, Rational>) return "q";
    else return "f" + std::to_string(K::characteristic);
}

namespace suite {

template <Field K>
size_t lie_dim(Family f, size_t N) {
    return lie_algebra<K>(GroupId{f, N}).dim();
}

inline std::string nid(size_t n) { return "n" + std::to_string(n); }

template <Field K>
CaseSpec lie_case(const std::string& what, Family f, size_t n, size_t N, size_t expected, const std::string& ref) {
    return {"c01." + what + "." + field_tag<K>() + "." + nid(n), ref, field_tag<K>(), n,
            [=] { return expect_equal(expected, lie_dim<K>(f, N)); }};
}

inline std::vector<CaseSpec> lie_dimension_cases() {
    std::vector<CaseSpec> out;
    auto so = [](size_t n) { return n * (2 * n + 1); };
    auto d = [](size_t n) { return n * (2 * n - 1); };
    for (size_t n = 1; n <= 4; ++n) {
        out.push_back(lie_case<Rational>("so-odd", Family::SO, n, 2 * n + 1, so(n), "dim so_{2n+1} = n(2n+1)"));
        out.push_back(lie_case<F3>("so-odd", Family::SO, n, 2 * n + 1, so(n), "dim so_{2n+1} = n(2n+1)"));
        out.push_back(lie_case<F5>("so-odd", Family::SO, n, 2 * n + 1, so(n), "dim so_{2n+1} = n(2n+1)"));
        out.push_back(lie_case<Rational>("sp", Family::Sp, n, 2 * n, so(n), "dim sp_{2n} = n(2n+1)"));
        out.push_back(lie_case<F2>("sp", Family::Sp, n, 2 * n, so(n), "dim sp_{2n} = n(2n+1)"));
        out.push_back(lie_case<Rational>("spin-odd", Family::Spin, n, 2 * n + 1, so(n), "Lie(Spin) = Lie(SO), odd rank"));
        out.push_back(lie_case<F3>("spin-odd", Family::Spin, n, 2 * n + 1, so(n), "Lie(Spin) = Lie(SO), odd rank"));
        out.push_back(lie_case<Rational>("spin-even", Family::Spin, n, 2 * n, d(n), "Lie(Spin) = Lie(SO), even rank"));
        out.push_back(lie_case<F3>("spin-even", Family::Spin, n, 2 * n, d(n), "Lie(Spin) = Lie(SO), even rank"));
    }
    for (size_t n = 2; n <= 4; ++n) {
        out.push_back(lie_case<Rational>("pgo", Family::PGO, n, 2 * n, d(n), "dim pgo_{2n} = n(2n-1)"));
        out.push_back(lie_case<F3>("pgo", Family::PGO, n, 2 * n, d(n), "dim pgo_{2n} = n(2n-1)"));
        out.push_back(lie_case<F2>("pgo", Family::PGO, n, 2 * n, d(n), "dim pgo_{2n} = n(2n-1)"));
    }
    return out;
}

// Over F2 the 2n^2 + 3n independent equations leave one extra dimension.
inline std::vector<CaseSpec> char2_anomaly_cases() {
    std::vector<CaseSpec> out;
    for (size_t n = 1; n <= 3; ++n) {
        size_t N = 2 * n + 1;
        out.push_back({"c02.o-odd.f2." + nid(n), "dim Lie(O_{2n+1}) over F2 = n(2n+1) + 1", "f2", n, [=] {
                           size_t dim = lie_dim<F2>(Family::O, N);
                           size_t from_count = N * N - (2 * n * n + 3 * n);
                           size_t expected = n * (2 * n + 1) + 1;
                           return Outcome{dim == expected && from_count == expected,
                                          std::to_string(expected) + " (= N^2 - (2n^2 + 3n))",
                                          std::to_string(dim)};
                       }});
    }
    return out;
}

template <Field K>
void clifford_center_cases(std::vector<CaseSpec>& out) {
    std::string t = field_tag<K>();
    for (size_t n = 1; n <= 4; ++n) {
        out.push_back({"c06.center-even-full." + t + "." + nid(n), "center of C(q_{2n}^h) is k", t, n,
                       [=] { return expect_equal(size_t(1), center(clifford_algebra(hyperbolic<K>(2 * n))).size()); }});
        out.push_back({"c06.center-even-c0." + t + "." + nid(n), "center of C_0(q_{2n}^h) has rank 2", t, n,
                       [=] { return expect_equal(size_t(2), even_center(clifford_algebra(hyperbolic<K>(2 * n))).size()); }});
        out.push_back({"c06.center-odd-full." + t + "." + nid(n), "center of C(q_{2n+1}^h) has rank 2", t, n, [=] {
                           return expect_equal(size_t(2), center(clifford_algebra(hyperbolic<K>(2 * n + 1))).size());
                       }});
    }
    for (size_t n = 0; n <= 3; ++n)
        out.push_back({"c06.w-squared." + t + "." + nid(n), "w^2 = 1 for the hyperbolic odd form", t, n, [=] {
                           return expect_equal(K(1), half_determinant(hyperbolic<K>(2 * n + 1)).w_squared);
                       }});
}

inline std::vector<CaseSpec> clifford_structure_cases() {
    std::vector<CaseSpec> out;
    for (size_t n = 1; n <= 3; ++n) {
        auto rank_of = [](size_t n) { return std::to_string(size_t(1) << (2 * n)); };
        out.push_back({"c06.exterior-model.q." + nid(n), "C(q_{2n}^h) = End(exterior algebra)", "q", n, [=] {
                           auto m = exterior_model<Rational>(n);
                           return Outcome{m.bijective && m.rank == size_t(1) << (2 * n), "bijective, rank " + rank_of(n),
                                          std::string(m.bijective ? "bijective" : "not bijective") + ", rank " +
                                              std::to_string(m.rank)};
                       }});
        out.push_back({"c06.exterior-model.f2." + nid(n), "C(q_{2n}^h) = End(exterior algebra)", "f2", n, [=] {
                           auto m = exterior_model<F2>(n);
                           return Outcome{m.bijective && m.rank == size_t(1) << (2 * n), "bijective, rank " + rank_of(n),
                                          std::string(m.bijective ? "bijective" : "not bijective") + ", rank " +
                                              std::to_string(m.rank)};
                       }});
    }
    for (size_t n = 1; n <= 2; ++n) {
        auto iso = [n]<class K>() {
            return CaseSpec{"c06.even-odd-iso." + field_tag<K>() + "." + nid(n), "C(q_{2n}^h) = C_0(q_{2n+1}^h)",
                            field_tag<K>(), n, [n] {
                                auto m = even_odd_iso<K>(n);
                                return Outcome{m.bijective && m.relations_hold, "isomorphism",
                                               m.bijective && m.relations_hold ? "isomorphism" : "not an isomorphism"};
                            }};
        };
        out.push_back(iso.template operator()<Rational>());
        out.push_back(iso.template operator()<F3>());
        out.push_back(iso.template operator()<F2>());
    }
    clifford_center_cases<Rational>(out);
    clifford_center_cases<F3>(out);
    clifford_center_cases<F2>(out);
    clifford_center_cases<F5>(out);
    return out;
}

} // namespace suite
} // namespace cgs
