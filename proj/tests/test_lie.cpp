#include <gtest/gtest.h>

#include "cgs/lie.hpp"
#include "support.hpp"

using namespace cgs;
using namespace testing_support;

namespace {

using Q = Rational;

size_t so_dim(size_t n) { return n * (2 * n + 1); }

template <class K>
size_t lie_dim(Family f, size_t n) {
    return lie_algebra<K>(GroupId{f, n}).dim();
}

// Count X over a finite field with Id + eps X in the group, testing the
// group's defining property over the dual numbers directly.
template <class K, class Pred>
size_t count_tangent(size_t n, Pred&& in_group) {
    using D = Dual<K>;
    size_t count = 0;
    for (auto& v : all_vectors<K>(n * n)) {
        Matrix<D> g = Matrix<D>::identity(n);
        for (size_t k = 0; k < n * n; ++k) g(k / n, k % n) += D(K(0), v[k]);
        if (in_group(g)) ++count;
    }
    return count;
}

size_t ipow(size_t b, size_t e) {
    size_t r = 1;
    while (e--) r *= b;
    return r;
}

template <class K>
Matrix<K> random_combination(const std::vector<Matrix<K>>& basis) {
    Matrix<K> x(basis[0].rows(), basis[0].cols());
    for (auto& b : basis) x = x + K(rand_int(-3, 3)) * b;
    return x;
}

template <class K>
CliffordElement<K> random_combination(const std::vector<CliffordElement<K>>& basis) {
    CliffordElement<K> x(basis[0].algebra());
    for (auto& b : basis) x += CliffordElement<K>::scalar(b.algebra(), K(rand_int(-3, 3))) * b;
    return x;
}

} // namespace

TEST(LieBracket, Examples) {
    auto E = [](size_t i, size_t j) { return Matrix<Q>::unit(2, 2, i, j); };
    EXPECT_EQ(bracket(E(0, 1), E(1, 0)), E(0, 0) - E(1, 1));
    auto x = random_combination(std::vector{E(0, 0), E(0, 1), E(1, 0), E(1, 1)});
    EXPECT_TRUE(bracket(x, x) == Matrix<Q>(2, 2));
    auto y = random_combination(std::vector{E(0, 0), E(0, 1), E(1, 0), E(1, 1)});
    EXPECT_EQ(bracket(x, y), Q(-1) * bracket(y, x));
}

TEST(LieAlgebra, LinearFamilies) {
    for (size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(lie_dim<Q>(Family::GL, n), n * n);
        EXPECT_EQ(lie_dim<F2>(Family::GL, n), n * n);
        EXPECT_EQ(lie_dim<Q>(Family::PGL, n), n * n - 1);
    }
    // trace zero, including p | n
    for (size_t n = 2; n <= 4; ++n) {
        auto check = [n](auto L) {
            EXPECT_EQ(L.dim(), n * n - 1) << L.group.str();
            for (auto& x : L.matrices) {
                auto tr = x(0, 0);
                for (size_t i = 1; i < n; ++i) tr += x(i, i);
                EXPECT_TRUE(tr.is_zero());
            }
            EXPECT_TRUE(is_independent(L));
        };
        check(lie_algebra<Q>(GroupId{Family::SL, n}));
        check(lie_algebra<F2>(GroupId{Family::SL, n}));
        check(lie_algebra<F3>(GroupId{Family::SL, n}));
    }
    EXPECT_EQ(lie_dim<F2>(Family::PGL, 2), 3u);
}

TEST(LieAlgebra, BruteForceOracle) {
    // SL2 over F2, SL3 over F3: det(Id + eps X) = 1
    auto sl = [](const auto& g) { return det_berkowitz(g) == std::decay_t<decltype(g(0, 0))>(1); };
    EXPECT_EQ(count_tangent<F2>(2, sl), ipow(2, lie_dim<F2>(Family::SL, 2)));
    EXPECT_EQ(count_tangent<F3>(3, sl), ipow(3, lie_dim<F3>(Family::SL, 3)));

    // O3 over F2 and F3: q(g x) = q(x) on the dual numbers
    auto o_pred = [](auto q) {
        return [q](auto g) { return preserves_form(q, g); };
    };
    using D2 = Dual<F2>;
    using D3 = Dual<F3>;
    EXPECT_EQ(count_tangent<F2>(3, o_pred(hyperbolic<D2>(3))), ipow(2, lie_dim<F2>(Family::O, 3)));
    EXPECT_EQ(count_tangent<F3>(3, o_pred(hyperbolic<D3>(3))), ipow(3, lie_dim<F3>(Family::O, 3)));
    EXPECT_EQ(count_tangent<F2>(4, o_pred(hyperbolic<D2>(4))), ipow(2, lie_dim<F2>(Family::O, 4)));

    // Sp4 over F2 and Sp2 over F3
    auto sp_pred = [](size_t n, auto one) {
        using D = decltype(one);
        auto h = symplectic_form<D>(n);
        return [h](const Matrix<D>& g) { return g.transpose() * h * g == h; };
    };
    EXPECT_EQ(count_tangent<F2>(4, sp_pred(4, D2(1))), ipow(2, lie_dim<F2>(Family::Sp, 4)));
    EXPECT_EQ(count_tangent<F3>(2, sp_pred(2, D3(1))), ipow(3, lie_dim<F3>(Family::Sp, 2)));
}

TEST(LieAlgebra, OrthogonalDimensions) {
    for (size_t n = 1; n <= 3; ++n) {
        size_t N = 2 * n + 1;
        EXPECT_EQ(lie_dim<Q>(Family::SO, N), so_dim(n));
        EXPECT_EQ(lie_dim<Q>(Family::O, N), so_dim(n));
        EXPECT_EQ(lie_dim<F3>(Family::SO, N), so_dim(n));
        EXPECT_EQ(lie_dim<F5>(Family::SO, N), so_dim(n));
        // characteristic 2: only 2n^2 + 3n independent equations
        EXPECT_EQ(lie_dim<F2>(Family::O, N), N * N - (2 * n * n + 3 * n));
        EXPECT_EQ(lie_dim<F2>(Family::O, N), so_dim(n) + 1);
    }
    for (size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(lie_dim<Q>(Family::O, 2 * n), n * (2 * n - 1));
        EXPECT_EQ(lie_dim<F2>(Family::O, 2 * n), n * (2 * n - 1));
    }
}

TEST(LieAlgebra, SymplecticAndSimilitudeDimensions) {
    for (size_t n = 1; n <= 3; ++n) {
        EXPECT_EQ(lie_dim<Q>(Family::Sp, 2 * n), so_dim(n));
        EXPECT_EQ(lie_dim<F2>(Family::Sp, 2 * n), so_dim(n));
        EXPECT_EQ(lie_dim<Q>(Family::PGSp, 2 * n), so_dim(n));
        EXPECT_EQ(lie_dim<Q>(Family::GO, 2 * n), n * (2 * n - 1) + 1);
    }
    for (size_t n = 2; n <= 4; ++n) {
        EXPECT_EQ(lie_dim<Q>(Family::PGO, 2 * n), n * (2 * n - 1));
        EXPECT_EQ(lie_dim<F3>(Family::PGO, 2 * n), n * (2 * n - 1));
    }
}

TEST(LieAlgebra, SpinMatchesOrthogonal) {
    for (size_t N = 2; N <= 7; ++N) {
        size_t n = N / 2;
        size_t expect = N % 2 ? so_dim(n) : n * (2 * n - 1);
        EXPECT_EQ(lie_dim<Q>(Family::Spin, N), expect) << N;
        EXPECT_EQ(lie_dim<F3>(Family::Spin, N), expect) << N;
    }
}

TEST(LieAlgebra, SpinDirectOracle) {
    // a + sigma(a) = 0 and [a, e_i] a vector, by enumeration of C_0 over F3
    for (size_t N : {3u, 4u}) {
        auto alg = clifford_algebra(hyperbolic<F3>(N));
        auto masks = detail::masks_of_parity(alg, 0);
        size_t count = 0;
        for (auto& v : all_vectors<F3>(masks.size())) {
            std::map<uint32_t, F3> c;
            for (size_t k = 0; k < masks.size(); ++k)
                if (!v[k].is_zero()) c[masks[k]] = v[k];
            CliffordElement<F3> a(alg, c);
            bool ok = (a + standard_involution(a)).is_zero();
            for (size_t i = 0; ok && i < N; ++i) {
                auto e = CliffordElement<F3>::generator(alg, i);
                ok = bracket(a, e).is_zero() || bracket(a, e).as_vector().has_value();
            }
            count += ok;
        }
        EXPECT_EQ(count, ipow(3, lie_dim<F3>(Family::Spin, N))) << N;
    }
}

TEST(ExplicitBasis, Cardinalities) {
    EXPECT_EQ(explicit_basis<Q>(GroupId{Family::SO, 5}).dim(), 10u);
    EXPECT_EQ(explicit_basis<Q>(GroupId{Family::Spin, 5}).dim(), 10u);
    for (size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(explicit_basis<Q>(GroupId{Family::SO, 2 * n + 1}).dim(), so_dim(n));
        EXPECT_EQ(explicit_basis<Q>(GroupId{Family::Spin, 2 * n + 1}).dim(), so_dim(n));
        EXPECT_EQ(explicit_basis<Q>(GroupId{Family::Spin, 2 * n}).dim(), n * (2 * n - 1));
        EXPECT_EQ(explicit_basis<Q>(GroupId{Family::Sp, 2 * n}).dim(), so_dim(n));
        EXPECT_EQ(explicit_basis<Q>(GroupId{Family::PGSp, 2 * n}).dim(), so_dim(n));
        EXPECT_EQ(explicit_basis<Q>(GroupId{Family::GO, 2 * n}).dim(), n * (2 * n - 1) + 1);
        if (n >= 2) {
            EXPECT_EQ(explicit_basis<Q>(GroupId{Family::PGO, 2 * n}).dim(), n * (2 * n - 1));
        }
    }
    EXPECT_THROW(explicit_basis<Q>(GroupId{Family::SO, 4}), DimensionMismatch);
    EXPECT_THROW(explicit_basis<Q>(GroupId{Family::PGO, 2}), DimensionMismatch);
    EXPECT_THROW(explicit_basis<Q>(GroupId{Family::GL, 2}), UnsupportedCase);
}

template <class K>
void check_explicit_basis(GroupId id) {
    auto P = explicit_basis<K>(id);
    auto L = lie_algebra<K>(id);
    ClassicalGroup<K> G(id);
    EXPECT_TRUE(is_independent(P)) << id.str();
    for (auto& x : P.matrices) EXPECT_TRUE(tangent_condition(G, x)) << id.str() << "\n" << x.str();
    for (auto& x : P.clifford) EXPECT_TRUE(tangent_condition(G, x)) << id.str() << " " << x.str();
    EXPECT_TRUE(same_span(P, L)) << id.str();
}

TEST(ExplicitBasis, SpanEqualsTangentKernel) {
    for (size_t n = 1; n <= 3; ++n) {
        check_explicit_basis<Q>({Family::SO, 2 * n + 1});
        check_explicit_basis<F3>({Family::SO, 2 * n + 1});
        check_explicit_basis<F5>({Family::SO, 2 * n + 1});
        check_explicit_basis<Q>({Family::Spin, 2 * n + 1});
        check_explicit_basis<Q>({Family::Spin, 2 * n});
        check_explicit_basis<F3>({Family::Spin, 2 * n + 1});
        check_explicit_basis<Q>({Family::Sp, 2 * n});
        check_explicit_basis<F2>({Family::Sp, 2 * n});
        check_explicit_basis<Q>({Family::PGSp, 2 * n});
        check_explicit_basis<Q>({Family::GO, 2 * n});
        check_explicit_basis<F3>({Family::GO, 2 * n});
        if (n >= 2) {
            check_explicit_basis<Q>({Family::PGO, 2 * n});
            check_explicit_basis<F3>({Family::PGO, 2 * n});
        }
    }
    check_explicit_basis<Q>({Family::PGO, 8});
    check_explicit_basis<Q>({Family::Spin, 8});
}

TEST(ExplicitBasis, CharacteristicTwoOrthogonal) {
    // the orthogonal algebra over F2 is one dimension larger than the explicit basis
    for (size_t n = 1; n <= 3; ++n) {
        GroupId so{Family::SO, 2 * n + 1};
        auto P = explicit_basis<F2>(so);
        auto L = lie_algebra<F2>(GroupId{Family::O, 2 * n + 1});
        auto ech = detail::span_of(L);
        for (auto& x : P.matrices) EXPECT_TRUE(ech.contains(detail::coords(x)));
        EXPECT_EQ(L.dim(), detail::span_of(P).rank() + 1);
        // with det = 1 the extra direction disappears
        EXPECT_TRUE(same_span(P, lie_algebra<F2>(so)));
    }
}

TEST(ExplicitBasis, SymplecticClosure) {
    auto P = explicit_basis<Q>(GroupId{Family::Sp, 4});
    ASSERT_EQ(P.dim(), 10u);  // 45 pairwise brackets
    EXPECT_TRUE(closure_check(P));
}

TEST(LieAlgebra, ClosureAndJacobi) {
    std::vector<GroupId> ids{{Family::GL, 3},  {Family::SL, 3}, {Family::PGL, 3}, {Family::SO, 5},
                             {Family::O, 4},   {Family::Sp, 4}, {Family::PGSp, 4}, {Family::GO, 4},
                             {Family::PGO, 6}, {Family::Spin, 5}, {Family::Spin, 6}};
    for (auto& id : ids) {
        auto L = lie_algebra<Q>(id);
        EXPECT_TRUE(closure_check(L)) << id.str();
        for (int t = 0; t < 200; ++t) {
            if (L.is_clifford()) {
                auto a = random_combination(L.clifford), b = random_combination(L.clifford),
                     c = random_combination(L.clifford);
                ASSERT_TRUE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
            } else {
                auto a = random_combination(L.matrices), b = random_combination(L.matrices),
                     c = random_combination(L.matrices);
                auto s = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
                ASSERT_TRUE(s == Matrix<Q>(id.n, id.n)) << id.str();
            }
        }
    }
    // over F2 too
    EXPECT_TRUE(closure_check(lie_algebra<F2>(GroupId{Family::O, 5})));
    EXPECT_TRUE(closure_check(explicit_basis<F2>(GroupId{Family::SO, 5})));
}

TEST(LieAlgebra, ResidualsAgreeWithMembership) {
    // the same equations decide membership at field points
    ClassicalGroup<F3> sp({Family::Sp, 2});
    for (auto& m : all_vectors<F3>(4)) {
        Matrix<F3> g(2, 2, m);
        bool eq = true;
        for (auto& r : sp.residuals(g)) eq = eq && r.is_zero();
        EXPECT_EQ(sp.contains(g), eq && det(g).is_unit());
    }
    auto alg = clifford_algebra(hyperbolic<F3>(3));
    auto x = CliffordElement<F3>::word(alg, {0, 1}) + CliffordElement<F3>::word(alg, {1, 0});
    ClassicalGroup<F3> spin({Family::Spin, 3}, hyperbolic<F3>(3));
    bool eq = true;
    for (auto& r : spin_residuals(x)) eq = eq && r.is_zero();
    EXPECT_EQ(eq, spin.contains(x));
}
