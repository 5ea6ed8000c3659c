#include <gtest/gtest.h>

#include "cgs/clifford.hpp"
#include "cgs/quad/cartan_dieudonne.hpp"
#include "support.hpp"

using namespace cgs;
using namespace testing_support;

namespace {

// Word-rewriting model of C(q): bubble-sort words using e_i e_i = q_ii and
// e_j e_i = b_ij - e_i e_j (i < j).
template <class R>
std::map<std::vector<int>, R> rewrite(const QuadraticModule<R>& q, std::map<std::vector<int>, R> x) {
    auto b = q.gram();
    std::map<std::vector<int>, R> done;
    while (!x.empty()) {
        auto [w, c] = *x.begin();
        x.erase(x.begin());
        if (c.is_zero()) continue;
        size_t k = 0;
        while (k + 1 < w.size() && w[k] < w[k + 1]) ++k;
        if (k + 1 >= w.size()) {
            done[w] += c;
            continue;
        }
        int i = w[k + 1], j = w[k];
        std::vector<int> shorter(w.begin(), w.begin() + long(k));
        shorter.insert(shorter.end(), w.begin() + long(k) + 2, w.end());
        if (i == j) {
            x[shorter] += c * q(size_t(i), size_t(i));
        } else {
            x[shorter] += c * b(size_t(i), size_t(j));
            auto swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            x[swapped] -= c;
        }
    }
    std::erase_if(done, [](auto& p) { return p.second.is_zero(); });
    return done;
}

std::vector<int> word_of(uint32_t m) {
    std::vector<int> w;
    for (int i = 0; i < 32; ++i)
        if (m >> i & 1u) w.push_back(i);
    return w;
}

template <class R>
CliffordElement<R> random_clifford(const CliffordPtr<R>& alg, int terms = 4) {
    std::map<uint32_t, R> c;
    for (int k = 0; k < terms; ++k) c[uint32_t(rand_int(0, long(alg->dimension()) - 1))] += random_element<R>();
    return CliffordElement<R>(alg, c);
}

template <class R>
QuadraticModule<R> random_form(size_t n) {
    Matrix<R> c(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) c(i, j) = random_element<R>();
    return QuadraticModule<R>(c);
}

template <class K>
Vec<K> random_anisotropic(const QuadraticModule<K>& q) {
    while (true) {
        auto v = random_vector<K>(q.rank());
        if (!q.value(v).is_zero()) return v;
    }
}

template <class K>
CliffordElement<K> random_gamma(const CliffordPtr<K>& alg, int len) {
    auto x = CliffordElement<K>::scalar(alg, K(1));
    for (int i = 0; i < len; ++i) x = x * CliffordElement<K>::vector(alg, random_anisotropic(alg->form()));
    return x;
}

} // namespace

template <class R>
void check_against_rewriting(size_t n) {
    for (int trial = 0; trial < 3; ++trial) {
        auto q = random_form<R>(n);
        auto alg = clifford_algebra(q);
        for (uint32_t u = 0; u < alg->dimension(); ++u)
            for (uint32_t v = 0; v < alg->dimension(); ++v) {
                std::vector<int> w = word_of(u), wv = word_of(v);
                w.insert(w.end(), wv.begin(), wv.end());
                auto oracle = rewrite(q, {{w, R(1)}});
                std::map<uint32_t, R> expected;
                for (auto& [word, c] : oracle) {
                    uint32_t m = 0;
                    for (int i : word) m |= 1u << i;
                    expected[m] = c;
                }
                auto got = CliffordElement<R>::basis(alg, u) * CliffordElement<R>::basis(alg, v);
                ASSERT_EQ(got, CliffordElement<R>(alg, expected)) << u << " * " << v;
            }
    }
}

TEST(Clifford, BasisProductsMatchRewriting) {
    check_against_rewriting<Rational>(4);
    check_against_rewriting<F3>(4);
    check_against_rewriting<F2>(3);
}

TEST(Clifford, Examples) {
    auto alg = clifford_algebra(hyperbolic<Rational>(2));
    auto e1 = CliffordElement<Rational>::generator(alg, 0), e2 = CliffordElement<Rational>::generator(alg, 1);
    EXPECT_TRUE((e1 * e1).is_zero());
    EXPECT_EQ(e1 * e2 + e2 * e1, CliffordElement<Rational>::scalar(alg, Rational(1)));
    EXPECT_EQ((e1 * e2) * (e1 * e2), e1 * e2);

    auto diag = clifford_algebra(diagonal_form<Rational>({Rational(3), Rational(-2)}));
    auto f1 = CliffordElement<Rational>::generator(diag, 0);
    EXPECT_EQ(f1 * f1, CliffordElement<Rational>::scalar(diag, Rational(3)));
}

template <class R>
void check_algebra_axioms(const QuadraticModule<R>& q) {
    auto alg = clifford_algebra(q);
    for (int t = 0; t < 500; ++t) {
        auto a = random_clifford(alg), b = random_clifford(alg), c = random_clifford(alg);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        auto sa = standard_involution(a), sb = standard_involution(b);
        ASSERT_EQ(standard_involution(a * b), sb * sa);
        ASSERT_EQ(standard_involution(sa), a);
        ASSERT_EQ((a.part(0) * b.part(1)).part(0), CliffordElement<R>(alg));
        ASSERT_EQ((a.part(1) * b.part(1)).part(1), CliffordElement<R>(alg));
    }
    size_t even = detail::masks_of_parity(alg, 0).size(), odd = detail::masks_of_parity(alg, 1).size();
    EXPECT_EQ(even, alg->dimension() / 2);
    EXPECT_EQ(odd, alg->dimension() / 2);
}

TEST(Clifford, AlgebraAxioms) {
    for (size_t n = 1; n <= 4; ++n) {
        check_algebra_axioms(random_form<Rational>(n));
        check_algebra_axioms(random_form<F3>(n));
        check_algebra_axioms(hyperbolic<F3>(n));
    }
}

TEST(Clifford, MixedAlgebrasRejected) {
    auto a = clifford_algebra(hyperbolic<Rational>(2));
    auto b = clifford_algebra(hyperbolic<Rational>(3));
    EXPECT_THROW(CliffordElement<Rational>::generator(a, 0) * CliffordElement<Rational>::generator(b, 0), AlgebraMismatch);
}

TEST(StandardInvolution, Examples) {
    auto q = random_form<Rational>(3);
    auto alg = clifford_algebra(q);
    using E = CliffordElement<Rational>;
    EXPECT_EQ(standard_involution(E::scalar(alg, Rational(1))), E::scalar(alg, Rational(1)));
    EXPECT_EQ(standard_involution(E::generator(alg, 1)), -E::generator(alg, 1));
    auto e12 = E::basis(alg, 0b011);
    EXPECT_EQ(standard_involution(e12), E::scalar(alg, q.gram()(0, 1)) - e12);
}

TEST(Clifford, Functoriality) {
    for (size_t n = 2; n <= 4; ++n) {
        auto q = hyperbolic<F5>(n);
        auto alg = clifford_algebra(q);
        auto random_orthogonal = [&] {
            std::vector<Vec<F5>> vs;
            for (int i = 0; i < 3; ++i) vs.push_back(random_anisotropic(q));
            return product_of_reflections(q, vs);
        };
        for (int t = 0; t < 20; ++t) {
            auto g = random_orthogonal(), h = random_orthogonal();
            auto x = random_clifford(alg), y = random_clifford(alg);
            EXPECT_EQ(apply_orthogonal(g, x * y), apply_orthogonal(g, x) * apply_orthogonal(g, y));
            EXPECT_EQ(apply_orthogonal(g, apply_orthogonal(h, x)), apply_orthogonal(g * h, x));
            EXPECT_EQ(apply_orthogonal(g, x.part(0)).part(1), CliffordElement<F5>(alg));
        }
    }
}

template <class K>
void check_center_dimensions() {
    for (size_t n = 1; n <= 4; ++n) {
        auto even = clifford_algebra(hyperbolic<K>(2 * n));
        EXPECT_EQ(center(even).size(), 1u) << "rank " << 2 * n;
        EXPECT_EQ(even_center(even).size(), 2u) << "rank " << 2 * n;
        auto odd = clifford_algebra(hyperbolic<K>(2 * n + 1));
        EXPECT_EQ(center(odd).size(), 2u) << "rank " << 2 * n + 1;
        auto hd = half_determinant(hyperbolic<K>(2 * n + 1));
        EXPECT_EQ(hd.w_squared, K(1));
    }
}

TEST(Center, HyperbolicDimensions) {
    check_center_dimensions<Rational>();
    check_center_dimensions<F3>();
    check_center_dimensions<F2>();
}

TEST(Center, EchelonizedBasisIsCentral) {
    auto alg = clifford_algebra(hyperbolic<F3>(5));
    auto z = center(alg);
    for (auto& c : z)
        for (int t = 0; t < 20; ++t) {
            auto x = random_clifford(alg);
            EXPECT_EQ(c * x, x * c);
        }
}

TEST(ArfSplit, Examples) {
    for (size_t n = 1; n <= 3; ++n) {
        EXPECT_TRUE(arf_split(hyperbolic<Rational>(2 * n)).split);
        EXPECT_TRUE(arf_split(hyperbolic<F2>(2 * n)).split);
        EXPECT_TRUE(arf_split(hyperbolic<F3>(2 * n)).split);
    }
    auto r = arf_split(diagonal_form<F3>({F3(1), F3(1)}));
    EXPECT_FALSE(r.split);
    EXPECT_EQ(r.z, CliffordElement<F3>::basis(r.z.algebra(), 0b11));
    EXPECT_EQ(r.a, F3(-1));
    EXPECT_EQ(r.b, F3(0));

    auto s = arf_split(diagonal_form<Rational>({Rational(1), Rational(-1)}));
    EXPECT_TRUE(s.split);
    EXPECT_EQ(s.z * s.z, CliffordElement<Rational>::scalar(s.z.algebra(), Rational(1)));
    // (1 + z)/2 is a nontrivial idempotent
    auto e = Rational(1, 2) * (CliffordElement<Rational>::scalar(s.z.algebra(), Rational(1)) + s.z);
    EXPECT_EQ(e * e, e);

    // x^2 + x + 1 is irreducible over F2: the anisotropic plane.
    Matrix<F2> c{{1, 1}, {0, 1}};
    EXPECT_FALSE(arf_split(QuadraticModule<F2>(c)).split);
}

TEST(Dickson, Examples) {
    for (auto q : {hyperbolic<F3>(2), hyperbolic<F3>(4), diagonal_form<F3>({F3(1), F3(1)})}) {
        DicksonContext<F3> dickson(q);
        EXPECT_EQ(dickson(Matrix<F3>::identity(q.rank())), 0);
        for (int t = 0; t < 30; ++t) EXPECT_EQ(dickson(reflection(q, random_anisotropic(q))), 1);
    }
    DicksonContext<F2> d2(hyperbolic<F2>(4));
    for (int t = 0; t < 30; ++t) EXPECT_EQ(d2(reflection(hyperbolic<F2>(4), random_anisotropic(hyperbolic<F2>(4)))), 1);
    auto q = hyperbolic<F3>(2);
    EXPECT_THROW(dickson_invariant(q, Matrix<F3>::diagonal({F3(1), F3(2)})), MembershipError);
}

TEST(Dickson, MatchesDeterminantOverF3) {
    auto q = hyperbolic<F3>(4);
    ReflectionSearch<F3> search(q);
    DicksonContext<F3> dickson(q);
    auto group = search.elements();
    EXPECT_EQ(group.size(), 1152u);
    for (auto& g : group) EXPECT_EQ(dickson(g) == 0, det(g) == F3(1));
}

TEST(Gamma, Examples) {
    auto q = hyperbolic<Rational>(3);
    auto alg = clifford_algebra(q);
    using E = CliffordElement<Rational>;
    auto lambda = E::scalar(alg, Rational(7, 3));
    EXPECT_TRUE(gamma_membership(lambda));
    EXPECT_EQ(vector_action(lambda), Matrix<Rational>::identity(3));
    for (int t = 0; t < 20; ++t) {
        auto v = random_anisotropic(q);
        auto x = E::vector(alg, v);
        EXPECT_TRUE(gamma_membership(x));
        EXPECT_EQ(vector_action(x), -reflection(q, v));
    }
    EXPECT_FALSE(gamma_membership(E::generator(alg, 1)));                            // isotropic, not invertible
    EXPECT_FALSE(gamma_membership(E::scalar(alg, Rational(1)) + E::generator(alg, 0)));  // not homogeneous

    auto alg2 = clifford_algebra(hyperbolic<Rational>(2));
    auto x = E::generator(alg2, 0) + E::generator(alg2, 1);
    EXPECT_TRUE(gamma_membership(x));
    // (e1 + e2) e1 (e1 + e2)^{-1} = e2, and symmetrically.
    Matrix<Rational> swap{{0, 1}, {1, 0}};
    EXPECT_EQ(vector_action(x), swap);
}

TEST(SpinorNorm, Examples) {
    auto q = hyperbolic<F5>(4);
    auto alg = clifford_algebra(q);
    using E = CliffordElement<F5>;
    EXPECT_EQ(spinor_norm(E::scalar(alg, F5(1))), F5(1));
    for (int t = 0; t < 50; ++t) {
        auto v = random_anisotropic(q);
        EXPECT_EQ(spinor_norm(E::vector(alg, v)), -q.value(v));
    }
    for (int t = 0; t < 50; ++t) {
        auto x = random_gamma(alg, int(rand_int(1, 3))), y = random_gamma(alg, int(rand_int(1, 3)));
        ASSERT_TRUE(gamma_membership(x));
        EXPECT_EQ(spinor_norm(x * y), spinor_norm(x) * spinor_norm(y));
    }
    // sigma(x) x = -2 e0 e1 e2 for x = e0 + e1 e2 on <1,1,1>.
    auto d = clifford_algebra(diagonal_form<F5>({F5(1), F5(1), F5(1)}));
    EXPECT_THROW(spinor_norm(E::generator(d, 0) + E::basis(d, 0b110)), MembershipError);
}

TEST(PinSpin, Examples) {
    auto q = diagonal_form<F5>({F5(-1), F5(2), F5(1)});
    auto alg = clifford_algebra(q);
    using E = CliffordElement<F5>;
    EXPECT_EQ(pin_spin_membership(E::generator(alg, 0)), PinStatus::PinOnly);
    EXPECT_EQ(pin_spin_membership(E::generator(alg, 1)), PinStatus::NotMember);

    auto h = clifford_algebra(hyperbolic<Rational>(5));
    using Q = CliffordElement<Rational>;
    Rational a(3, 2);
    auto x = a * Q::word(h, {1, 2}) + a.inv() * Q::word(h, {2, 1});
    EXPECT_EQ(pin_spin_membership(x), PinStatus::Spin);

    for (long l = 1; l <= 4; ++l) {
        auto s = E::scalar(alg, F5(l));
        EXPECT_EQ(pin_spin_membership(s) == PinStatus::Spin, F5(l) * F5(l) == F5(1));
    }
}

template <class K>
void check_exterior(size_t n) {
    auto m = exterior_model<K>(n);
    EXPECT_TRUE(m.bijective);
    EXPECT_EQ(m.rank, size_t(1) << (2 * n));
    auto& j = m.generator_images;
    auto id = Matrix<K>::identity(size_t(1) << n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            auto jm = j[2 * i], jf = j[2 * k + 1];
            EXPECT_EQ((jm + jf) * (jm + jf), (i == k ? K(1) : K(0)) * id);
        }
}

TEST(ExteriorModel, Isomorphism) {
    auto m1 = exterior_model<Rational>(1);
    Matrix<Rational> wedge{{0, 0}, {1, 0}}, contraction{{0, 1}, {0, 0}};
    EXPECT_EQ(m1.generator_images[0], wedge);
    EXPECT_EQ(m1.generator_images[1], contraction);
    for (size_t n = 1; n <= 3; ++n) {
        check_exterior<Rational>(n);
        check_exterior<F2>(n);
    }
}

TEST(ExteriorModel, Multiplicative) {
    size_t n = 2;
    auto m = exterior_model<Rational>(n);
    auto alg = clifford_algebra(hyperbolic<Rational>(2 * n));
    auto as_matrix = [&](const CliffordElement<Rational>& x) {
        Matrix<Rational> acc(size_t(1) << n, size_t(1) << n);
        for (auto& [s, c] : x.coeffs()) {
            auto p = Matrix<Rational>::identity(size_t(1) << n);
            for (size_t i = 0; i < 2 * n; ++i)
                if (s >> i & 1u) p = p * m.generator_images[i];
            acc = acc + c * p;
        }
        return acc;
    };
    for (int t = 0; t < 100; ++t) {
        auto x = random_clifford(alg), y = random_clifford(alg);
        EXPECT_EQ(as_matrix(x * y), as_matrix(x) * as_matrix(y));
    }
}

TEST(EvenOddIso, Isomorphism) {
    for (size_t n = 1; n <= 2; ++n) {
        EXPECT_TRUE(even_odd_iso<Rational>(n).bijective);
        EXPECT_TRUE(even_odd_iso<F3>(n).bijective);
    }
    auto m = even_odd_iso<F3>(2);
    EXPECT_EQ(m.matrix.rows(), 16u);
    EXPECT_EQ(m.rank, 16u);

    // Multiplicativity and centers.
    for (size_t n = 1; n <= 2; ++n) {
        auto src = clifford_algebra(hyperbolic<Rational>(2 * n));
        auto dst = clifford_algebra(hyperbolic<Rational>(2 * n + 1));
        auto images = even_odd_generator_images(dst, n);
        for (int t = 0; t < 50; ++t) {
            auto x = random_clifford(src), y = random_clifford(src);
            EXPECT_EQ(extend_multiplicatively(dst, images, x * y),
                      extend_multiplicatively(dst, images, x) * extend_multiplicatively(dst, images, y));
        }
        auto zs = center(src);
        auto zt = even_center(dst);
        ASSERT_EQ(zs.size(), zt.size());
        EXPECT_EQ(extend_multiplicatively(dst, images, zs[0]), zt[0]);
    }
}

TEST(HalfDeterminant, Examples) {
    auto r = half_determinant(diagonal_form<Rational>({Rational(1), Rational(1), Rational(1)}));
    auto alg = r.w.algebra();
    auto e123 = CliffordElement<Rational>::basis(alg, 0b111);
    EXPECT_EQ(r.w, e123);
    EXPECT_EQ(r.w_squared, Rational(-1));
    EXPECT_EQ(e123 * e123, CliffordElement<Rational>::scalar(alg, Rational(-1)));
    EXPECT_FALSE(r.square_class_trivial);

    for (size_t n = 0; n <= 3; ++n) {
        auto h = half_determinant(hyperbolic<F5>(2 * n + 1));
        EXPECT_EQ(h.w_squared, F5(1));
        EXPECT_TRUE(h.square_class_trivial);
    }
    EXPECT_THROW(half_determinant(hyperbolic<Rational>(2)), UnsupportedCase);
    EXPECT_THROW(half_determinant(diagonal_form<Rational>({Rational(0), Rational(0), Rational(1)})), UnsupportedCase);
}
