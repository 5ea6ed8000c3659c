#include <gtest/gtest.h>

#include <set>

#include "cgs/groups.hpp"
#include "support.hpp"

using namespace cgs;
using namespace testing_support;

namespace {

// Every n x n matrix over a finite field, for brute-force oracles.
template <class K>
std::vector<Matrix<K>> all_matrices(size_t n) {
    std::vector<Matrix<K>> out;
    for (auto& v : all_vectors<K>(n * n)) {
        Matrix<K> m(n, n);
        for (size_t i = 0; i < n * n; ++i) m(i / n, i % n) = v[i];
        out.push_back(m);
    }
    return out;
}

// q(gx) = q(x) for every vector x and g invertible: the defining property.
template <class K>
bool orthogonal_oracle(const QuadraticModule<K>& q, const Matrix<K>& g, const std::vector<Vec<K>>& vectors) {
    if (det(g).is_zero()) return false;
    for (auto& x : vectors)
        if (q.value(g * x) != q.value(x)) return false;
    return true;
}

template <class K>
std::set<std::vector<K>> as_set(const std::vector<Matrix<K>>& ms) {
    std::set<std::vector<K>> s;
    for (auto& m : ms) s.insert(m.entries());
    return s;
}

template <class K>
void expect_group(const std::vector<Matrix<K>>& elems, bool projective) {
    auto norm = [&](const Matrix<K>& m) { return projective ? projective_canonical(m) : m; };
    auto s = as_set(elems);
    ASSERT_EQ(s.size(), elems.size()) << "duplicates";
    size_t n = elems.front().rows();
    EXPECT_TRUE(s.count(Matrix<K>::identity(n).entries()));
    for (size_t i = 0; i < elems.size(); i += 1 + elems.size() / 60)
        for (size_t j = 0; j < elems.size(); j += 1 + elems.size() / 60) {
            ASSERT_TRUE(s.count(norm(elems[i] * elems[j]).entries()));
        }
    for (auto& g : elems) ASSERT_TRUE(s.count(norm(inverse(g)).entries()));
}

template <class K>
Enumeration<K> enum_of(Family f, size_t n) {
    return enumerate(ClassicalGroup<K>(GroupId{f, n}));
}

} // namespace

TEST(Membership, Examples) {
    ClassicalGroup<Rational> o2(GroupId{Family::O, 2});
    Matrix<Rational> swap{{0, 1}, {1, 0}};
    EXPECT_TRUE(o2.contains(swap));
    EXPECT_FALSE(o2.contains(Matrix<Rational>{{1, 1}, {0, 1}}));

    ClassicalGroup<Rational> sp2(GroupId{Family::Sp, 2});
    for (Rational a : {Rational(3, 2), Rational(-7), Rational(1, 5)})
        EXPECT_TRUE(sp2.contains(Matrix<Rational>::diagonal({a, a.inv()})));
    ClassicalGroup<F5> sp4(GroupId{Family::Sp, 4});
    EXPECT_TRUE(sp4.contains(Matrix<F5>::diagonal({F5(2), F5(3), F5(3), F5(2)})));

    EXPECT_THROW(o2.contains(Matrix<Rational>::identity(3)), DimensionMismatch);
    EXPECT_THROW(ClassicalGroup<Rational>(GroupId{Family::Sp, 3}), DimensionMismatch);
}

TEST(Membership, SymplecticTwoIsSpecialLinearOverF3) {
    ClassicalGroup<F3> sp(GroupId{Family::Sp, 2}), sl(GroupId{Family::SL, 2});
    auto h = symplectic_form<F3>(2);
    std::vector<Matrix<F3>> sp_oracle, sl_oracle;
    for (auto& m : all_matrices<F3>(2)) {
        if (m.transpose() * h * m == h) sp_oracle.push_back(m);
        if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == F3(1)) sl_oracle.push_back(m);
        EXPECT_EQ(sp.contains(m), sl.contains(m));
    }
    EXPECT_EQ(sp_oracle.size(), 24u);
    EXPECT_EQ(as_set(sp_oracle), as_set(sl_oracle));
    EXPECT_EQ(as_set(enum_of<F3>(Family::Sp, 2).matrices), as_set(sp_oracle));
    EXPECT_EQ(as_set(enum_of<F3>(Family::SL, 2).matrices), as_set(sl_oracle));
}

TEST(Enumerate, OrthogonalSmallCases) {
    auto o = enum_of<F2>(Family::O, 2);
    EXPECT_EQ(o.size(), 2u);
    std::vector<Matrix<F2>> oracle;
    for (auto& m : all_matrices<F2>(2))
        if (orthogonal_oracle(hyperbolic<F2>(2), m, all_vectors<F2>(2))) oracle.push_back(m);
    EXPECT_EQ(as_set(o.matrices), as_set(oracle));

    auto o3 = enum_of<F3>(Family::O, 3);
    std::vector<Matrix<F3>> oracle3;
    auto vecs = all_vectors<F3>(3);
    for (auto& m : all_matrices<F3>(3))
        if (orthogonal_oracle(hyperbolic<F3>(3), m, vecs)) oracle3.push_back(m);
    EXPECT_EQ(as_set(o3.matrices), as_set(oracle3));
    auto so3 = enum_of<F3>(Family::SO, 3);
    EXPECT_EQ(2 * so3.size(), o3.size());
    expect_group(so3.matrices, false);
}

TEST(Enumerate, BudgetExceeded) {
    EnumerationOptions tight;
    tight.budget = 100;
    EXPECT_THROW(enumerate(ClassicalGroup<F3>(GroupId{Family::O, 4}), tight), BudgetError);
}

TEST(Enumerate, SpecialOrthogonalIndex) {
    for (size_t n : {3u, 5u}) {
        auto o = enum_of<F3>(Family::O, n);
        auto so = enum_of<F3>(Family::SO, n);
        EXPECT_EQ(2 * so.size(), o.size()) << n;
    }
    auto o5 = enum_of<F5>(Family::O, 3);
    auto so5 = enum_of<F5>(Family::SO, 3);
    EXPECT_EQ(2 * so5.size(), o5.size());
    EXPECT_EQ(o5.size(), 240u);  // 2 |PGL_2(F5)|
    expect_group(so5.matrices, false);
}

TEST(Enumerate, OplusIndex) {
    for (size_t n : {2u, 4u}) {
        auto o = enum_of<F2>(Family::O, n);
        auto op = enum_of<F2>(Family::Oplus, n);
        EXPECT_EQ(2 * op.size(), o.size()) << n;
        for (auto& g : o.matrices) EXPECT_EQ(det(g), F2(1));
        expect_group(op.matrices, false);

        auto o3 = enum_of<F3>(Family::O, n);
        auto op3 = enum_of<F3>(Family::Oplus, n);
        auto so3 = enum_of<F3>(Family::SO, n);
        EXPECT_EQ(2 * op3.size(), o3.size());
        EXPECT_EQ(as_set(op3.matrices), as_set(so3.matrices));
    }
    EXPECT_EQ(enum_of<F2>(Family::O, 4).size(), 72u);
    EXPECT_EQ(enum_of<F3>(Family::O, 4).size(), 1152u);
}

TEST(Enumerate, LinearFamilies) {
    auto gl = enum_of<F3>(Family::GL, 2);
    EXPECT_EQ(gl.size(), 48u);
    auto pgl = enum_of<F3>(Family::PGL, 2);
    EXPECT_EQ(pgl.size(), 24u);
    expect_group(gl.matrices, false);
    expect_group(pgl.matrices, true);
    EXPECT_EQ(enum_of<F2>(Family::GL, 3).size(), 168u);
    EXPECT_EQ(enum_of<F3>(Family::SL, 3).size(), 5616u);
}

TEST(Enumerate, SimilitudeFamilies) {
    auto o = enum_of<F3>(Family::O, 4);
    auto go = enum_of<F3>(Family::GO, 4);
    auto pgo = enum_of<F3>(Family::PGO, 4);
    auto pgop = enum_of<F3>(Family::PGOplus, 4);
    EXPECT_EQ(go.size(), 2 * o.size());
    EXPECT_EQ(2 * pgo.size(), go.size());
    EXPECT_EQ(2 * pgop.size(), pgo.size());
    expect_group(go.matrices, false);
    expect_group(pgo.matrices, true);
    expect_group(pgop.matrices, true);

    auto sp = enum_of<F3>(Family::Sp, 4);
    auto pgsp = enum_of<F3>(Family::PGSp, 4);
    EXPECT_EQ(sp.size(), 51840u);
    EXPECT_EQ(pgsp.size(), sp.size());  // |GSp| = 2|Sp|, modulo the 2 scalars
    expect_group(pgsp.matrices, true);

    // char 2: PGO+ still index 2.
    auto pgo2 = enum_of<F2>(Family::PGO, 4);
    auto pgop2 = enum_of<F2>(Family::PGOplus, 4);
    EXPECT_EQ(2 * pgop2.size(), pgo2.size());
}

TEST(Similitude, Factor) {
    auto p = split_quadratic_pair<Rational>(2);
    ClassicalGroup<Rational> go(GroupId{Family::GO, 4});
    Rational l(5, 3);
    auto scalar = l * Matrix<Rational>::identity(4);
    EXPECT_EQ(go_similitude_factor(p, scalar), l * l);
    auto d = Matrix<Rational>::diagonal({Rational(2), Rational(1), Rational(2), Rational(1)});
    EXPECT_EQ(go_similitude_factor(p, d), Rational(2));
    EXPECT_EQ(*go.similitude(d), Rational(2));
    auto h = p.h;
    EXPECT_EQ(d.transpose() * h * d, Rational(2) * h);
    Matrix<Rational> swap{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_EQ(go_similitude_factor(p, swap), Rational(1));
    EXPECT_THROW(go_similitude_factor(p, Matrix<Rational>::diagonal({Rational(2), Rational(1), Rational(1), Rational(1)})),
                 MembershipError);

    auto pf = split_quadratic_pair<F5>(2);
    auto gos = enum_of<F5>(Family::O, 4);
    ClassicalGroup<F5> go5(GroupId{Family::GO, 4});
    for (int t = 0; t < 50; ++t) {
        auto a = gos.matrices[size_t(rand_int(0, long(gos.size()) - 1))] *
                 Matrix<F5>::diagonal({F5(rand_int(1, 4)), F5(1), F5(0), F5(1)});
        auto mu = F5(rand_int(1, 4));
        a = gos.matrices[size_t(rand_int(0, long(gos.size()) - 1))] * Matrix<F5>::diagonal({mu, F5(1), mu, F5(1)});
        auto b = gos.matrices[size_t(rand_int(0, long(gos.size()) - 1))];
        EXPECT_EQ(go_similitude_factor(pf, a * b), go_similitude_factor(pf, a) * go_similitude_factor(pf, b));
        EXPECT_EQ(go_similitude_factor(pf, b), F5(1));
        EXPECT_TRUE(go5.contains(a));
    }
}

TEST(CliffordGroups, OddRankF3) {
    auto gamma = enum_of<F3>(Family::Gamma, 3);
    auto o = enum_of<F3>(Family::O, 3);
    auto so = enum_of<F3>(Family::SO, 3);
    EXPECT_TRUE(gamma.closed);
    std::set<std::vector<F3>> image;
    ClassicalGroup<F3> g(GroupId{Family::Gamma, 3});
    size_t kernel = 0;
    auto w = half_determinant(hyperbolic<F3>(3)).w;
    for (auto& x : gamma.clifford) {
        ASSERT_TRUE(g.contains(x));
        auto m = vector_action(x);
        image.insert(m.entries());
        if (m.is_identity()) {
            ++kernel;
            // in odd rank the kernel is F3* times {1, w}
            EXPECT_TRUE(x.is_scalar() || (x * w).is_scalar());
        }
    }
    EXPECT_EQ(kernel, 4u);
    EXPECT_EQ(gamma.size(), kernel * so.size());
    // conjugation by a vector is -tau_v, of determinant 1 in odd rank
    EXPECT_EQ(image, as_set(so.matrices));

    auto spin = enum_of<F3>(Family::Spin, 3);
    auto pin = enum_of<F3>(Family::Pin, 3);
    ClassicalGroup<F3> sg(GroupId{Family::Spin, 3});
    for (auto& x : spin.clifford) EXPECT_TRUE(sg.contains(x));
    EXPECT_EQ(spin.size(), 24u);  // SL_2(F3)
    EXPECT_GE(pin.size(), spin.size());
}

TEST(CliffordGroups, EvenRankF3) {
    auto gamma = enum_of<F3>(Family::Gamma, 4);
    auto o = enum_of<F3>(Family::O, 4);
    EXPECT_TRUE(gamma.closed);
    EXPECT_EQ(gamma.size(), 2 * o.size());
    std::set<std::vector<F3>> image;
    for (auto& x : gamma.clifford) image.insert(vector_action(x).entries());
    EXPECT_EQ(image, as_set(o.matrices));
    auto sgamma = enum_of<F3>(Family::SGamma, 4);
    EXPECT_EQ(2 * sgamma.size(), gamma.size());
}
