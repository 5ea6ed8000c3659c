#include <gtest/gtest.h>

#include <set>

#include "cgs/quadform.hpp"
#include "support.hpp"

using namespace cgs;
using namespace testing_support;

template <class K>
static std::vector<Matrix<K>> brute_force_orthogonal(const QuadraticModule<K>& q) {
    // every n x n matrix over K, tested entrywise against the definition q(gx) = q(x)
    size_t n = q.rank();
    auto vecs = all_vectors<K>(n * n);
    std::vector<Matrix<K>> out;
    auto probes = all_vectors<K>(n);
    for (auto& v : vecs) {
        Matrix<K> g(n, n, v);
        if (det(g).is_zero()) continue;
        bool ok = true;
        for (auto& x : probes)
            if (q.value(g * x) != q.value(x)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

TEST(Hyperbolic, Shapes) {
    auto q2 = hyperbolic<Rational>(2);
    EXPECT_EQ(q2.value(Vec<Rational>{Rational(3), Rational(5)}), Rational(15));
    EXPECT_EQ(hyperbolic<Rational>(0).rank(), 0u);
    auto q5 = hyperbolic<Rational>(5);
    Vec<Rational> x{Rational(2), Rational(3), Rational(5), Rational(7), Rational(11)};
    EXPECT_EQ(q5.value(x), Rational(4 + 15 + 77));
}

template <class R>
static void check_form_invariants(const QuadraticModule<R>& q) {
    size_t n = q.rank();
    for (int k = 0; k < 100; ++k) {
        auto x = random_vector<R>(n), y = random_vector<R>(n), z = random_vector<R>(n);
        R l = random_element<R>();
        Vec<R> lx(n), xy(n), yz(n);
        for (size_t i = 0; i < n; ++i) {
            lx[i] = l * x[i];
            xy[i] = x[i] + y[i];
            yz[i] = y[i] + z[i];
        }
        EXPECT_EQ(q.value(lx), l * l * q.value(x));
        R b = q.value(xy) - q.value(x) - q.value(y);
        EXPECT_EQ(q.polar(x, y), b);
        EXPECT_EQ(q.polar(y, x), b);
        EXPECT_EQ(q.polar(x, yz), q.polar(x, y) + q.polar(x, z));
    }
    auto g = polar(q).gram;
    for (size_t i = 0; i < n; ++i) EXPECT_EQ(g(i, i), R(2) * q(i, i));
}

TEST(QuadraticModule, Invariants) {
    for (int t = 0; t < 5; ++t) {
        size_t n = size_t(rand_int(1, 5));
        Matrix<Rational> c(n, n);
        Matrix<F2> c2(n, n);
        Matrix<F3> c3(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                c(i, j) = random_element<Rational>();
                c2(i, j) = random_element<F2>();
                c3(i, j) = random_element<F3>();
            }
        check_form_invariants(QuadraticModule<Rational>(c));
        check_form_invariants(QuadraticModule<F2>(c2));
        check_form_invariants(QuadraticModule<F3>(c3));
    }
}

TEST(Polar, Examples) {
    auto d = polar(diagonal_form<Rational>({Rational(3), Rational(-1, 2)}));
    EXPECT_EQ(d.gram, Matrix<Rational>::diagonal({Rational(6), Rational(-1)}));
    EXPECT_EQ(polar(hyperbolic<Rational>(2)).gram, (Matrix<Rational>{{0, 1}, {1, 0}}));
    EXPECT_TRUE(polar(diagonal_form<F2>({F2(1)})).gram.is_zero());
    EXPECT_TRUE(polar(hyperbolic<F2>(4)).is_alternating());
    EXPECT_TRUE(polar(hyperbolic<Rational>(5)).is_symmetric());
}

TEST(Determinant, Examples) {
    for (size_t n = 1; n <= 4; ++n)
        EXPECT_EQ(determinant_scalar(polar(hyperbolic<Rational>(2 * n))), Rational(n % 2 ? -1 : 1));
    for (int k = 0; k < 50; ++k) {
        Rational a = random_element<Rational>(), b = random_element<Rational>();
        EXPECT_EQ(determinant_scalar(polar(binary_form(a, b))), Rational(4) * a * b - Rational(1));
    }
    EXPECT_EQ(determinant_scalar(polar(QuadraticModule<Rational>(Matrix<Rational>(3, 3)))), Rational(0));
}

TEST(Regular, Examples) {
    EXPECT_TRUE(is_regular(hyperbolic<F2>(4)));
    EXPECT_FALSE(is_regular(diagonal_form<F2>({F2(1)})));
    EXPECT_FALSE(is_regular(binary_form(Rational(1, 2), Rational(1, 2))));
    EXPECT_TRUE(is_regular(binary_form(Rational(1), Rational(1))));
    EXPECT_FALSE(is_regular(hyperbolic<F2>(5)));
    EXPECT_TRUE(is_semiregular(hyperbolic<F2>(5)));
    EXPECT_TRUE(is_semiregular(hyperbolic<F2>(3)));
    EXPECT_FALSE(is_semiregular(diagonal_form<F2>({F2(1), F2(1), F2(1)})));
    EXPECT_TRUE(is_semiregular(hyperbolic<F3>(3)));
}

TEST(Regular, BaseChangeToPrimeFields) {
    for (int k = 0; k < 100; ++k) {
        size_t n = size_t(rand_int(1, 4));
        Matrix<Integer> c(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) c(i, j) = Integer(rand_int(-6, 6));
        QuadraticModule<Integer> q(c);
        Integer d = determinant_scalar(polar(q));
        auto reduce3 = [](const Integer& x) { return F3(long(mpz_fdiv_ui(x.value().get_mpz_t(), 3))); };
        auto reduce5 = [](const Integer& x) { return F5(long(mpz_fdiv_ui(x.value().get_mpz_t(), 5))); };
        QuadraticModule<F3> q3(c.map(reduce3));
        QuadraticModule<F5> q5(c.map(reduce5));
        EXPECT_EQ(is_regular(q3), reduce3(d).is_unit());
        EXPECT_EQ(is_regular(q5), reduce5(d).is_unit());
        if (is_regular(q)) {
            EXPECT_TRUE(is_regular(q3));
            EXPECT_TRUE(is_regular(q5));
        }
    }
}

TEST(BinaryDecompose, Examples) {
    for (size_t n = 1; n <= 3; ++n) {
        auto bd = binary_decompose(hyperbolic<Rational>(2 * n));
        EXPECT_EQ(bd.blocks.size(), n);
        for (auto& [a, b] : bd.blocks) {
            EXPECT_EQ(a, Rational(0));
            EXPECT_EQ(b, Rational(0));
        }
        EXPECT_EQ(bd.basis, Matrix<Rational>::identity(2 * n));
    }

    auto q = diagonal_form<F3>({F3(1), F3(1)});
    auto bd = binary_decompose(q);
    ASSERT_EQ(bd.blocks.size(), 1u);
    EXPECT_EQ(bd.blocks[0], std::make_pair(F3(1), F3(2)));
    // oracle: some basis of F3^2 carries <1,1> onto [1,2], and none onto the singular [1,1]
    bool found12 = false, found11 = false;
    for (auto& v : all_vectors<F3>(4)) {
        Matrix<F3> p(2, 2, v);
        if (det(p).is_zero()) continue;
        auto r = change_basis(q, p);
        found12 |= r == binary_form(F3(1), F3(2));
        found11 |= r == binary_form(F3(1), F3(1));
    }
    EXPECT_TRUE(found12);
    EXPECT_FALSE(found11);

    auto qq = diagonal_form<Rational>({Rational(1), Rational(-1)});
    auto bq = binary_decompose(qq);
    ASSERT_EQ(bq.blocks.size(), 1u);
    auto [a, b] = bq.blocks[0];
    EXPECT_FALSE((Rational(1) - Rational(4) * a * b).is_zero());
    EXPECT_EQ(change_basis(qq, bq.basis), binary_form(a, b));

    EXPECT_THROW(binary_decompose(hyperbolic<Rational>(3)), DecompositionError);
    EXPECT_THROW(binary_decompose(diagonal_form<F2>({F2(1), F2(1)})), DecompositionError);
}

TEST(BinaryDecompose, RandomRegularForms) {
    for (int k = 0; k < 40; ++k) {
        Matrix<F5> c(4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i; j < 4; ++j) c(i, j) = random_element<F5>();
        QuadraticModule<F5> q(c);
        if (!is_regular(q)) continue;
        auto bd = binary_decompose(q);
        EXPECT_EQ(bd.blocks.size(), 2u);
        for (auto& [a, b] : bd.blocks) EXPECT_TRUE((F5(1) - F5(4) * a * b).is_unit());
    }
}

template <class K>
static void check_reflections(const QuadraticModule<K>& q, int samples) {
    size_t n = q.rank();
    int seen = 0;
    for (int k = 0; k < 20 * samples && seen < samples; ++k) {
        auto v = random_vector<K>(n);
        if (!q.value(v).is_unit()) continue;
        ++seen;
        auto t = reflection(q, v);
        EXPECT_TRUE(in_orthogonal_group(q, t));
        EXPECT_EQ(t * t, Matrix<K>::identity(n));
        EXPECT_EQ(det(t), K(-1));
        Vec<K> mv(n);
        for (size_t i = 0; i < n; ++i) mv[i] = -v[i];
        EXPECT_EQ(t * v, mv);
    }
    EXPECT_GT(seen, 0);
}

TEST(Reflection, Properties) {
    auto q5 = hyperbolic<Rational>(5);
    EXPECT_EQ(det(reflection(q5, basis_vector<Rational>(5, 0))), Rational(-1));
    check_reflections(hyperbolic<Rational>(4), 50);
    check_reflections(diagonal_form<Rational>({Rational(1), Rational(2), Rational(-3)}), 50);
    check_reflections(hyperbolic<F3>(5), 50);
    check_reflections(hyperbolic<F5>(4), 50);
    check_reflections(hyperbolic<F2>(4), 50);
    check_reflections(hyperbolic<F2>(3), 20);
    EXPECT_THROW(reflection(hyperbolic<Rational>(2), basis_vector<Rational>(2, 0)), NotInvertible);
    // over F2 the reflection fixes v-perp pointwise
    auto q = hyperbolic<F2>(4);
    Vec<F2> v{F2(1), F2(1), F2(0), F2(0)};
    auto t = reflection(q, v);
    for (auto& x : all_vectors<F2>(4))
        if (q.polar(x, v).is_zero()) {
            EXPECT_EQ(t * x, x);
        }
}

TEST(CartanDieudonne, SmallCases) {
    auto q = diagonal_form<F3>({F3(1), F3(1)});
    EXPECT_TRUE(cartan_dieudonne(q, Matrix<F3>::identity(2)).empty());
    auto minus = -Matrix<F3>::identity(2);
    auto vs = cartan_dieudonne(q, minus);
    EXPECT_EQ(vs.size(), 2u);
    EXPECT_EQ(product_of_reflections(q, vs), minus);
    // oracle: -1 is not a reflection but is a product of two
    bool single = false, pair = false;
    auto vecs = all_vectors<F3>(2);
    for (auto& v : vecs) {
        if (!q.value(v).is_unit()) continue;
        single |= reflection(q, v) == minus;
        for (auto& w : vecs)
            if (q.value(w).is_unit()) pair |= reflection(q, v) * reflection(q, w) == minus;
    }
    EXPECT_FALSE(single);
    EXPECT_TRUE(pair);
    EXPECT_THROW(cartan_dieudonne(q, Matrix<F3>{{1, 1}, {0, 1}}), MembershipError);
}

TEST(CartanDieudonne, FullOrthogonalGroupOddRankF3) {
    auto q = hyperbolic<F3>(3);
    auto group = brute_force_orthogonal(q);
    EXPECT_EQ(group.size(), 48u);  // |O_3(F3)| = 2 |SO_3(F3)| = 2 |PGL_2(F3)|
    for (auto& g : group) {
        auto vs = cartan_dieudonne(q, g);
        EXPECT_EQ(product_of_reflections(q, vs), g);
        EXPECT_LE(vs.size(), 6u);
        EXPECT_EQ(vs.size() % 2 == 0, det(g) == F3(1));
    }
}

TEST(CartanDieudonne, SemiregularCharacteristicTwo) {
    auto q = hyperbolic<F2>(3);
    auto group = brute_force_orthogonal(q);
    EXPECT_EQ(group.size(), 6u);
    ReflectionSearch<F2> search(q);
    EXPECT_EQ(search.group_size(), group.size());
    for (auto& g : group) {
        auto vs = cartan_dieudonne(q, g);
        EXPECT_EQ(product_of_reflections(q, vs), g);
        EXPECT_LE(vs.size(), 6u);
    }
}

TEST(QuadraticPair, SplitPair) {
    auto p1 = split_quadratic_pair<Rational>(1);
    EXPECT_EQ(p1.h, (Matrix<Rational>{{0, 1}, {1, 0}}));
    EXPECT_EQ(p1.f(Matrix<Rational>::identity(2)), Rational(1));
    EXPECT_EQ(p1.f(Matrix<Rational>::unit(2, 2, 0, 1)), Rational(0));
    EXPECT_EQ(p1.f(Matrix<Rational>::unit(2, 2, 1, 0)), Rational(0));
    for (size_t n = 1; n <= 4; ++n) {
        auto p = split_quadratic_pair<Rational>(n);
        size_t N = 2 * n;
        EXPECT_EQ(p.f_table.size(), n * (2 * n + 1));
        Matrix<Rational> span(p.f_table.size(), N * N);
        for (size_t k = 0; k < p.f_table.size(); ++k) {
            auto& [s, v] = p.f_table[k];
            EXPECT_TRUE(p.is_symmetric(s));
            EXPECT_EQ(p.f(s), v);
            for (size_t e = 0; e < N * N; ++e) span(k, e) = s.entries()[e];
        }
        EXPECT_EQ(rank(span), n * (2 * n + 1));
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) {
                auto a = Matrix<Rational>::unit(N, N, i, j);
                EXPECT_EQ(p.f(a + p.eta(a)), a.trace());
                EXPECT_EQ(p.eta(p.eta(a)), a);
            }
    }
}

TEST(QuadraticPair, FromFormDefiningProperty) {
    for (size_t n = 1; n <= 3; ++n) {
        auto q = hyperbolic<Rational>(2 * n);
        auto p = pair_from_form(q);
        auto s = split_quadratic_pair<Rational>(n);
        EXPECT_EQ(p.h, s.h);
        for (auto& [x, v] : s.f_table) EXPECT_EQ(p.f(x), v);
        for (int k = 0; k < 100; ++k) {
            auto m = random_vector<Rational>(2 * n);
            EXPECT_EQ(p.f(phi(q, m, m)), q.value(m));
        }
    }
    EXPECT_THROW(pair_from_form(binary_form(F3(1), F3(1))), NotInvertible);
}

TEST(QuadraticPair, FunctionalMatchesLinearSolve) {
    // oracle: solve for f on the 3-dim symmetric space from f(phi(m m)) = q(m)
    auto q = binary_form(F3(1), F3(2));
    auto p = pair_from_form(q);
    auto vecs = all_vectors<F3>(2);
    Matrix<F3> a(vecs.size(), 4);
    Vec<F3> rhs(vecs.size());
    for (size_t k = 0; k < vecs.size(); ++k) {
        auto x = phi(q, vecs[k], vecs[k]);
        for (size_t e = 0; e < 4; ++e) a(k, e) = x.entries()[e];
        rhs[k] = q.value(vecs[k]);
    }
    auto sol = solve(a, rhs);
    ASSERT_TRUE(sol.has_value());
    Matrix<F3> lt(2, 2, *sol);  // f(X) = sum lt_ij X_ij
    for (auto& [s, v] : p.f_table) {
        F3 viasolve;
        for (size_t e = 0; e < 4; ++e) viasolve += lt.entries()[e] * s.entries()[e];
        EXPECT_EQ(viasolve, v);
        EXPECT_EQ(p.f(s), v);
    }
    for (auto& m : vecs) EXPECT_EQ(p.f(phi(q, m, m)), q.value(m));
}
