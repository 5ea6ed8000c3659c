#pragma once
#include <optional>

#include "cgs/cliff/clifford.hpp"
#include "cgs/ring/squares.hpp"

namespace cgs {

namespace detail {

// Elements supported on `masks` commuting with every element of `tests`.
template <Field K>
std::vector<CliffordElement<K>> commutant(const CliffordPtr<K>& alg, const std::vector<uint32_t>& masks,
                                          const std::vector<CliffordElement<K>>& tests) {
    std::map<std::pair<size_t, uint32_t>, typename SparseEchelon<K>::Row> rows;
    for (size_t col = 0; col < masks.size(); ++col) {
        auto es = CliffordElement<K>::basis(alg, masks[col]);
        for (size_t k = 0; k < tests.size(); ++k) {
            auto d = es * tests[k] - tests[k] * es;
            for (auto& [w, c] : d.coeffs()) rows[{k, w}][col] = c;
        }
    }
    SparseEchelon<K> ech(masks.size());
    for (auto& [key, row] : rows) ech.add(row);
    std::vector<CliffordElement<K>> out;
    for (auto& v : ech.kernel()) {
        std::map<uint32_t, K> c;
        for (size_t col = 0; col < masks.size(); ++col)
            if (!v[col].is_zero()) c[masks[col]] = v[col];
        out.emplace_back(alg, std::move(c));
    }
    return out;
}

template <Ring R>
std::vector<uint32_t> masks_of_parity(const CliffordPtr<R>& alg, int parity) {
    std::vector<uint32_t> out;
    for (uint32_t s = 0; s < alg->dimension(); ++s)
        if (parity < 0 || (std::popcount(s) & 1) == parity) out.push_back(s);
    return out;
}

} // namespace detail

// Center of C(q), echelonized.
template <Field K>
std::vector<CliffordElement<K>> center(const CliffordPtr<K>& alg) {
    std::vector<CliffordElement<K>> gens;
    for (size_t i = 0; i < alg->rank(); ++i) gens.push_back(CliffordElement<K>::generator(alg, i));
    return detail::commutant(alg, detail::masks_of_parity(alg, -1), gens);
}

// Center of the even part C_0(q), tested against all products e_i e_j.
template <Field K>
std::vector<CliffordElement<K>> even_center(const CliffordPtr<K>& alg) {
    std::vector<CliffordElement<K>> gens;
    for (size_t i = 0; i < alg->rank(); ++i)
        for (size_t j = i + 1; j < alg->rank(); ++j) gens.push_back(CliffordElement<K>::basis(alg, (1u << i) | (1u << j)));
    return detail::commutant(alg, detail::masks_of_parity(alg, 0), gens);
}

template <Field K>
struct ArfResult {
    bool split = false;
    CliffordElement<K> z;  // non-scalar generator of the center of C_0
    K a, b;                // z^2 = a + b z
    std::string polynomial() const { return "x^2 - (" + b.str() + ")x - (" + a.str() + ")"; }
};

namespace detail {

// A non-scalar element z of the 2-dim center of C_0 with z^2 = a + b z.
template <Field K>
ArfResult<K> even_center_generator(const CliffordPtr<K>& alg) {
    auto basis = even_center(alg);
    if (basis.size() != 2) throw StructuralFailure("center of the even Clifford algebra is not 2-dimensional");
    ArfResult<K> r;
    for (auto& x : basis)
        if (!x.is_scalar()) r.z = x;
    if (r.z.is_zero()) throw StructuralFailure("even center has no non-scalar element");
    if (!r.z.coeff(0).is_zero()) r.z = r.z - CliffordElement<K>::scalar(alg, r.z.coeff(0));
    auto z2 = r.z * r.z;
    auto [m, zm] = *r.z.coeffs().begin();
    r.a = z2.coeff(0);
    r.b = z2.coeff(m) * zm.inv();
    if (!(z2 == CliffordElement<K>::scalar(alg, r.a) + r.b * r.z))
        throw StructuralFailure("even center is not spanned by 1 and z");
    return r;
}

} // namespace detail

template <Field K>
ArfResult<K> arf_split(const QuadraticModule<K>& q) {
    if (q.rank() % 2 != 0 || !is_regular(q)) throw UnsupportedCase("arf_split needs a regular even-rank form");
    auto r = detail::even_center_generator(clifford_algebra(q));
    r.split = quadratic_has_root(r.a, r.b);
    return r;
}

// Action of O(q) on the center of C_0; reuses one center computation.
template <Field K>
class DicksonContext {
public:
    explicit DicksonContext(const QuadraticModule<K>& q) : q_(q) {
        if (q.rank() % 2 != 0 || !is_regular(q)) throw UnsupportedCase("Dickson invariant needs a regular even-rank form");
        alg_ = clifford_algebra(q);
        gen_ = detail::even_center_generator(alg_);
    }

    const CliffordPtr<K>& algebra() const { return alg_; }
    const CliffordElement<K>& z() const { return gen_.z; }

    int operator()(const Matrix<K>& g) const {
        if (!in_orthogonal_group(q_, g)) throw MembershipError("matrix is not in O(q)");
        return of_center_image(apply_orthogonal(g, gen_.z));
    }

    // 0 if the image of z is z, 1 if it is the other root.
    int of_center_image(const CliffordElement<K>& image) const {
        if (image == gen_.z) return 0;
        auto other = CliffordElement<K>::scalar(alg_, gen_.b) - gen_.z;
        if (image == other) return 1;
        throw StructuralFailure("automorphism does not preserve the even center");
    }

private:
    QuadraticModule<K> q_;
    CliffordPtr<K> alg_;
    ArfResult<K> gen_;
};

template <Field K>
int dickson_invariant(const QuadraticModule<K>& q, const Matrix<K>& g) {
    return DicksonContext<K>(q)(g);
}

// Matrix of m -> x m y on span(e_i), or nullopt if some image leaves the span.
template <Ring R>
std::optional<Matrix<R>> conjugation_matrix(const CliffordElement<R>& x, const CliffordElement<R>& y) {
    auto alg = x.algebra();
    size_t n = alg->rank();
    Matrix<R> m(n, n);
    for (size_t i = 0; i < n; ++i) {
        auto v = (x * CliffordElement<R>::generator(alg, i) * y).as_vector();
        if (!v) return std::nullopt;
        m.set_column(i, *v);
    }
    return m;
}

template <Field K>
bool gamma_membership(const CliffordElement<K>& x) {
    if (x.is_zero() || !x.is_homogeneous()) return false;
    auto y = clifford_inverse(x);
    if (!y) return false;
    return conjugation_matrix(x, *y).has_value();
}

// m -> x m x^{-1} for x in Gamma, given an inverse.
template <Ring R>
Matrix<R> vector_action(const CliffordElement<R>& x, const CliffordElement<R>& xinv) {
    auto m = conjugation_matrix(x, xinv);
    if (!m) throw MembershipError("conjugation leaves the vector span");
    if (!preserves_form(x.algebra()->form(), *m)) throw StructuralFailure("vector action is not orthogonal");
    return *m;
}

template <Field K>
Matrix<K> vector_action(const CliffordElement<K>& x) {
    if (!x.is_homogeneous()) throw MembershipError("element is not homogeneous");
    auto y = clifford_inverse(x);
    if (!y) throw MembershipError("element is not invertible");
    return vector_action(x, *y);
}

// sigma(x) x, which must be a scalar.
template <Ring R>
R spinor_norm(const CliffordElement<R>& x) {
    auto n = standard_involution(x) * x;
    if (!n.is_scalar()) throw MembershipError("spinor norm is not a scalar");
    return n.coeff(0);
}

enum class PinStatus { NotMember, PinOnly, Spin };

inline const char* to_string(PinStatus s) {
    switch (s) {
    case PinStatus::NotMember: return "not-member";
    case PinStatus::PinOnly: return "pin-only";
    case PinStatus::Spin: return "spin";
    }
    return "?";
}

template <Field K>
PinStatus pin_spin_membership(const CliffordElement<K>& x) {
    if (!gamma_membership(x)) return PinStatus::NotMember;
    if (spinor_norm(x) != K(1)) return PinStatus::NotMember;
    return x.is_even() ? PinStatus::Spin : PinStatus::PinOnly;
}

// Linear map between algebras, as a matrix on the chosen bases.
template <Ring R>
struct AlgebraMap {
    std::vector<Matrix<R>> generator_images;  // for matrix targets
    Matrix<R> matrix;                          // columns: images of e_S
    size_t rank = 0;
    bool relations_hold = false;
    bool bijective = false;
};

namespace detail {

template <Ring R>
Vec<R> flatten(const Matrix<R>& m) {
    Vec<R> v;
    v.reserve(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

inline int sign_before(uint32_t t, uint32_t i) { return (std::popcount(t & ((1u << i) - 1)) & 1) ? -1 : 1; }

} // namespace detail

// Wedge m_i ^ (-) on the exterior algebra, basis indexed by subsets.
template <Ring R>
Matrix<R> wedge_operator(size_t n, size_t i) {
    uint32_t d = 1u << n;
    Matrix<R> m(d, d);
    for (uint32_t t = 0; t < d; ++t)
        if (!(t >> i & 1u)) m(t | (1u << i), t) = R(detail::sign_before(t, uint32_t(i)));
    return m;
}

// Contraction d_{f_i} with the dual basis form f_i.
template <Ring R>
Matrix<R> contraction_operator(size_t n, size_t i) {
    uint32_t d = 1u << n;
    Matrix<R> m(d, d);
    for (uint32_t t = 0; t < d; ++t)
        if (t >> i & 1u) m(t ^ (1u << i), t) = R(detail::sign_before(t, uint32_t(i)));
    return m;
}

// C(q_2n^h) -> End(Lambda^* R^n) with e_{2i} -> m_i ^ (-), e_{2i+1} -> d_{f_i} (0-based).
template <Field K>
AlgebraMap<K> exterior_model(size_t n) {
    auto q = hyperbolic<K>(2 * n);
    size_t d = size_t(1) << n;
    AlgebraMap<K> out;
    for (size_t i = 0; i < n; ++i) {
        out.generator_images.push_back(wedge_operator<K>(n, i));
        out.generator_images.push_back(contraction_operator<K>(n, i));
    }
    auto& j = out.generator_images;
    auto id = Matrix<K>::identity(d);
    out.relations_hold = true;
    for (size_t a = 0; a < 2 * n && out.relations_hold; ++a)
        for (size_t b = a; b < 2 * n; ++b) {
            Vec<K> x(2 * n);
            x[a] += K(1);
            if (b != a) x[b] += K(1);
            auto jx = a == b ? j[a] : j[a] + j[b];
            if (!(jx * jx == q.value(x) * id)) {
                out.relations_hold = false;
                break;
            }
        }
    uint32_t dim = 1u << (2 * n);
    out.matrix = Matrix<K>(d * d, dim);
    for (uint32_t s = 0; s < dim; ++s) {
        Matrix<K> p = id;
        for (size_t i = 0; i < 2 * n; ++i)
            if (s >> i & 1u) p = p * j[i];
        out.matrix.set_column(s, detail::flatten(p));
    }
    out.rank = rank(out.matrix);
    out.bijective = out.rank == dim && d * d == dim;
    if (!out.relations_hold || !out.bijective) throw StructuralFailure("exterior model is not an isomorphism");
    return out;
}

// Images in C(q_{2n+1}^h) of the generators of C(q_2n^h): e_k -> (+/-) e_{k+1} e_0.
template <Ring R>
std::vector<CliffordElement<R>> even_odd_generator_images(const CliffordPtr<R>& target, size_t n) {
    std::vector<CliffordElement<R>> out;
    auto e0 = CliffordElement<R>::generator(target, 0);
    for (size_t k = 0; k < 2 * n; ++k) {
        auto x = CliffordElement<R>::generator(target, k + 1) * e0;
        out.push_back(k % 2 == 0 ? x : -x);
    }
    return out;
}

// Extension of the generator images to all of C(q): e_S -> product of images.
template <Ring R>
CliffordElement<R> extend_multiplicatively(const CliffordPtr<R>& target, const std::vector<CliffordElement<R>>& images,
                                           const CliffordElement<R>& x) {
    CliffordElement<R> out(target);
    for (auto& [s, c] : x.coeffs()) {
        auto p = CliffordElement<R>::scalar(target, c);
        for (size_t i = 0; i < images.size(); ++i)
            if (s >> i & 1u) p = p * images[i];
        out += p;
    }
    return out;
}

// C(q_2n^h) -> C_0(q_{2n+1}^h), (m, g) -> i(m, -g) e with e = e_0.
template <Field K>
AlgebraMap<K> even_odd_iso(size_t n) {
    auto src_form = hyperbolic<K>(2 * n);
    auto target = clifford_algebra(hyperbolic<K>(2 * n + 1));
    auto images = even_odd_generator_images(target, n);
    AlgebraMap<K> out;
    out.relations_hold = true;
    for (size_t a = 0; a < 2 * n; ++a)
        for (size_t b = a; b < 2 * n; ++b) {
            Vec<K> x(2 * n);
            x[a] += K(1);
            if (b != a) x[b] += K(1);
            auto px = a == b ? images[a] : images[a] + images[b];
            if (!(px * px == CliffordElement<K>::scalar(target, src_form.value(x)))) out.relations_hold = false;
        }
    auto even = detail::masks_of_parity(target, 0);
    std::map<uint32_t, size_t> row_of;
    for (size_t r = 0; r < even.size(); ++r) row_of[even[r]] = r;
    uint32_t dim = 1u << (2 * n);
    auto src = clifford_algebra(src_form);
    out.matrix = Matrix<K>(even.size(), dim);
    for (uint32_t s = 0; s < dim; ++s) {
        auto img = extend_multiplicatively(target, images, CliffordElement<K>::basis(src, s));
        for (auto& [w, c] : img.coeffs()) {
            auto it = row_of.find(w);
            if (it == row_of.end()) throw StructuralFailure("image leaves the even part");
            out.matrix(it->second, s) = c;
        }
    }
    out.rank = rank(out.matrix);
    out.bijective = out.rank == dim && even.size() == dim;
    if (!out.relations_hold || !out.bijective) throw StructuralFailure("even-odd map is not an isomorphism");
    return out;
}

template <Field K>
struct HalfDeterminant {
    K w_squared;
    CliffordElement<K> w;
    bool square_class_trivial = false;
};

// Odd generator w of the center of C(q), scaled so its lowest basis coefficient is 1.
template <Field K>
HalfDeterminant<K> half_determinant(const QuadraticModule<K>& q) {
    if (q.rank() % 2 == 0) throw UnsupportedCase("half-determinant needs odd rank");
    if (rank(q.gram()) + 1 < q.rank()) throw UnsupportedCase("polar form is too degenerate");
    auto alg = clifford_algebra(q);
    auto z = center(alg);
    std::vector<CliffordElement<K>> odd;
    for (auto& x : z)
        if (x.is_odd()) odd.push_back(x);
    if (z.size() != 2 || odd.size() != 1) throw UnsupportedCase("center of C(q) is degenerate");
    HalfDeterminant<K> r;
    r.w = odd[0].coeffs().begin()->second.inv() * odd[0];
    auto w2 = r.w * r.w;
    if (!w2.is_scalar()) throw StructuralFailure("w^2 is not a scalar");
    r.w_squared = w2.coeff(0);
    if constexpr (FiniteRing<K> || std::is_same_v<K, Rational>) r.square_class_trivial = is_square(r.w_squared);
    return r;
}

} // namespace cgs
