#pragma once
#include <algorithm>
#include <string>
#include <unordered_set>
#include <variant>

#include "cgs/cliff/structure.hpp"
#include "cgs/quad/cartan_dieudonne.hpp"
#include "cgs/quad/pair.hpp"

namespace cgs {

enum class Family { GL, SL, PGL, O, SO, Oplus, Sp, PGSp, GO, PGO, PGOplus, Gamma, SGamma, Pin, Spin };

inline const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> names{
        {Family::GL, "GL"},       {Family::SL, "SL"},         {Family::PGL, "PGL"},     {Family::O, "O"},
        {Family::SO, "SO"},       {Family::Oplus, "Oplus"},   {Family::Sp, "Sp"},       {Family::PGSp, "PGSp"},
        {Family::GO, "GO"},       {Family::PGO, "PGO"},       {Family::PGOplus, "PGOplus"}, {Family::Gamma, "Gamma"},
        {Family::SGamma, "SGamma"}, {Family::Pin, "Pin"},     {Family::Spin, "Spin"}};
    return names;
}

inline std::string to_string(Family f) {
    for (auto& [g, s] : family_names())
        if (g == f) return s;
    return "?";
}

// Case-insensitive.
inline std::optional<Family> parse_family(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return char(std::tolower(c)); });
    for (auto& [g, name] : family_names()) {
        std::string low = name;
        std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return char(std::tolower(c)); });
        if (low == s) return g;
    }
    return std::nullopt;
}

inline bool is_clifford_family(Family f) {
    return f == Family::Gamma || f == Family::SGamma || f == Family::Pin || f == Family::Spin;
}
inline bool is_projective_family(Family f) {
    return f == Family::PGL || f == Family::PGSp || f == Family::PGO || f == Family::PGOplus;
}
inline bool is_orthogonal_family(Family f) { return f == Family::O || f == Family::SO || f == Family::Oplus; }
inline bool is_similitude_family(Family f) { return f == Family::GO || f == Family::PGO || f == Family::PGOplus; }
inline bool is_symplectic_family(Family f) { return f == Family::Sp || f == Family::PGSp; }

// n is the matrix size (for Clifford families, the rank of the form).
struct GroupId {
    Family family;
    size_t n;
    std::string str() const { return to_string(family) + "_" + std::to_string(n); }
    friend bool operator==(const GroupId&, const GroupId&) = default;
};

// Alternating hyperbolic form on R^m + (R^m)^dual: [[0, I], [-I, 0]].
template <Ring R>
Matrix<R> symplectic_form(size_t n) {
    if (n % 2) throw DimensionMismatch("symplectic groups need even size");
    size_t m = n / 2;
    Matrix<R> h(n, n);
    for (size_t i = 0; i < m; ++i) {
        h(i, m + i) = R(1);
        h(m + i, i) = R(-1);
    }
    return h;
}

// Scale so that the first nonzero entry in row-major order is 1.
template <Field K>
Matrix<K> projective_canonical(const Matrix<K>& g) {
    for (auto& x : g.entries())
        if (!x.is_zero()) return x.inv() * g;
    throw NotInvertible("zero matrix");
}

template <Field K>
bool is_projective_canonical(const Matrix<K>& g) {
    for (auto& x : g.entries())
        if (!x.is_zero()) return x == K(1);
    return false;
}

// mu with eta(a) a = mu Id, for a in GO of the pair.
template <Ring R>
R go_similitude_factor(const QuadraticPair<R>& p, const Matrix<R>& a) {
    auto m = p.eta(a) * a;
    R mu = m(0, 0);
    if (!(m == mu * Matrix<R>::identity(a.rows()))) throw MembershipError("eta(a) a is not scalar");
    return mu;
}

// Image of the center generator of C_0 under the automorphism induced by a
// similitude g with multiplier mu: e_i e_j -> mu^{-1} g(e_i) g(e_j).
template <Field K>
int similitude_dickson(const DicksonContext<K>& ctx, const Matrix<K>& g, const K& mu) {
    auto alg = ctx.algebra();
    size_t n = alg->rank();
    std::vector<CliffordElement<K>> images;
    for (size_t i = 0; i < n; ++i) images.push_back(CliffordElement<K>::vector(alg, g.column(i)));
    K mu_inv = mu.inv();
    CliffordElement<K> out(alg);
    for (auto& [s, c] : ctx.z().coeffs()) {
        auto t = CliffordElement<K>::scalar(alg, c * pow(mu_inv, long(std::popcount(s) / 2)));
        for (size_t i = 0; i < n; ++i)
            if (s >> i & 1u) t = t * images[i];
        out += t;
    }
    return ctx.of_center_image(out);
}

template <Ring R>
class ClassicalGroup {
public:
    explicit ClassicalGroup(GroupId id) : ClassicalGroup(id, default_form(id)) {}

    ClassicalGroup(GroupId id, QuadraticModule<R> q) : id_(id), q_(std::move(q)) {
        Family f = id.family;
        if (id.n == 0) throw DimensionMismatch("group size must be positive");
        if (is_symplectic_family(f)) h_ = symplectic_form<R>(id.n);
        if (is_orthogonal_family(f) || is_similitude_family(f) || is_clifford_family(f)) {
            if (q_.rank() != id.n) throw DimensionMismatch("form rank differs from group size");
        }
        if (is_similitude_family(f)) {
            if (id.n % 2) throw DimensionMismatch("GO families need even rank");
            pair_ = pair_from_form(q_);
        }
        if constexpr (Field<R>) {
            if (f == Family::Oplus || f == Family::PGOplus) dickson_ = std::make_shared<DicksonContext<R>>(q_);
            if (is_clifford_family(f)) alg_ = clifford_algebra(q_);
        }
    }

    const GroupId& id() const { return id_; }
    const QuadraticModule<R>& form() const { return q_; }
    const Matrix<R>& symplectic() const { return h_; }
    const std::optional<QuadraticPair<R>>& pair() const { return pair_; }
    const CliffordPtr<R>& algebra() const {
        if (!alg_) throw UnsupportedCase("no Clifford algebra for this group");
        return alg_;
    }

    bool contains(const Matrix<R>& g) const {
        Family f = id_.family;
        if (is_clifford_family(f)) throw DimensionMismatch("Clifford group needs a Clifford payload");
        if (g.rows() != id_.n || g.cols() != id_.n) throw DimensionMismatch("matrix size differs from group");
        if (!det(g).is_unit()) return false;
        for (auto& r : residuals(g))
            if (!r.is_zero()) return false;
        if (f == Family::Oplus || f == Family::PGOplus) {
            if constexpr (Field<R>) {
                if (f == Family::Oplus) return (*dickson_)(g) == 0;
                return similitude_dickson(*dickson_, g, (pair_->eta(g) * g)(0, 0)) == 0;
            } else {
                throw UnsupportedRing("Dickson condition needs a field");
            }
        }
        return true;
    }

    // The polynomial equations cutting out the matrix group inside the
    // invertible matrices, evaluated over any ring S receiving R. Plain
    // membership, tangent vectors and torus checks all go through here.
    // O+ and PGO+ share the equations of O and GO (the Dickson condition is
    // open and closed, not polynomial).
    template <Ring S>
    std::vector<S> residuals(const Matrix<S>& g) const {
        auto li = [](const R& r) { return lift<S>(r); };
        std::vector<S> out;
        auto push_diff = [&out](const Matrix<S>& a, const Matrix<S>& b) {
            for (size_t k = 0; k < a.entries().size(); ++k) out.push_back(a.entries()[k] - b.entries()[k]);
        };
        switch (id_.family) {
        case Family::GL:
        case Family::PGL: break;
        case Family::SL: out.push_back(det(g) - S(1)); break;
        case Family::O:
        case Family::SO:
        case Family::Oplus: {
            Matrix<S> b = q_.gram().map(li);
            push_diff(g.transpose() * b * g, b);
            for (size_t i = 0; i < id_.n; ++i) out.push_back(q_.template value<S>(g.column(i)) - li(q_(i, i)));
            if (id_.family == Family::SO) out.push_back(det(g) - S(1));
            break;
        }
        case Family::Sp: {
            Matrix<S> h = h_.map(li);
            push_diff(g.transpose() * h * g, h);
            break;
        }
        case Family::PGSp: {
            Matrix<S> h = h_.map(li);
            Matrix<S> m = g.transpose() * h * g;
            push_diff(m, m(0, id_.n / 2) * h);
            break;
        }
        case Family::GO:
        case Family::PGO:
        case Family::PGOplus: {
            Matrix<S> gt = pair_->eta(g);
            Matrix<S> m = gt * g;
            S mu = m(0, 0);
            push_diff(m, mu * Matrix<S>::identity(id_.n));
            for (auto& [c, fc] : pair_->f_table) out.push_back(pair_->f(g * c.map(li) * gt) - mu * li(fc));
            break;
        }
        default: throw UnsupportedCase("no matrix equations for " + id_.str());
        }
        return out;
    }

    bool contains(const CliffordElement<R>& x) const {
        if (!is_clifford_family(id_.family)) throw DimensionMismatch("matrix group needs a matrix payload");
        if (x.algebra() && x.algebra()->rank() != id_.n) throw DimensionMismatch("Clifford rank differs from group");
        if constexpr (Field<R>) {
            switch (id_.family) {
            case Family::Gamma: return gamma_membership(x);
            case Family::SGamma: return x.is_even() && gamma_membership(x);
            case Family::Pin: return pin_spin_membership(x) != PinStatus::NotMember;
            case Family::Spin: return pin_spin_membership(x) == PinStatus::Spin;
            default: return false;
            }
        } else {
            throw UnsupportedRing("Clifford group membership needs a field");
        }
    }

    // Multiplier mu of a similitude of the pair, checked on both eta(g)g and f.
    std::optional<R> similitude(const Matrix<R>& g) const {
        if (!pair_) throw UnsupportedCase("group has no quadratic pair");
        auto m = pair_->eta(g) * g;
        R mu = m(0, 0);
        if (!mu.is_unit() || !(m == mu * Matrix<R>::identity(id_.n))) return std::nullopt;
        auto gt = pair_->eta(g);
        for (auto& [c, fc] : pair_->f_table)
            if (pair_->f(g * c * gt) != mu * fc) return std::nullopt;
        return mu;
    }

private:
    static QuadraticModule<R> default_form(GroupId id) {
        if (is_orthogonal_family(id.family) || is_similitude_family(id.family) || is_clifford_family(id.family))
            return hyperbolic<R>(id.n);
        return QuadraticModule<R>(Matrix<R>(0, 0));
    }

    GroupId id_;
    QuadraticModule<R> q_;
    Matrix<R> h_;
    std::optional<QuadraticPair<R>> pair_;
    std::shared_ptr<DicksonContext<R>> dickson_;
    CliffordPtr<R> alg_;
};

// Equations of Spin in the Clifford algebra: x even, x sigma(x) = 1 and
// x e_i sigma(x) a vector for every generator. One entry per basis
// coefficient, so the list has the same shape for every x.
template <Ring S>
std::vector<S> spin_residuals(const CliffordElement<S>& x) {
    auto alg = x.algebra();
    uint32_t dim = uint32_t(alg->dimension());
    std::vector<S> out;
    for (uint32_t m = 0; m < dim; ++m)
        if (std::popcount(m) & 1) out.push_back(x.coeff(m));
    auto sx = standard_involution(x);
    auto n = x * sx;
    for (uint32_t m = 0; m < dim; ++m) out.push_back(m == 0 ? n.coeff(0) - S(1) : n.coeff(m));
    for (size_t i = 0; i < alg->rank(); ++i) {
        auto y = x * CliffordElement<S>::generator(alg, i) * sx;
        for (uint32_t m = 0; m < dim; ++m)
            if (std::popcount(m) != 1) out.push_back(y.coeff(m));
    }
    return out;
}

template <Ring R>
struct GroupElement {
    GroupId tag;
    std::variant<Matrix<R>, CliffordElement<R>> payload;
};

// Checks membership and canonicalizes projective representatives.
template <Field K>
GroupElement<K> make_element(const ClassicalGroup<K>& g, const Matrix<K>& m) {
    if (!g.contains(m)) throw MembershipError("matrix is not in " + g.id().str());
    return {g.id(), is_projective_family(g.id().family) ? projective_canonical(m) : m};
}

template <Field K>
GroupElement<K> make_element(const ClassicalGroup<K>& g, const CliffordElement<K>& x) {
    if (!g.contains(x)) throw MembershipError("element is not in " + g.id().str());
    return {g.id(), x};
}

} // namespace cgs

template <cgs::Ring R>
struct std::hash<cgs::CliffordElement<R>> {
    size_t operator()(const cgs::CliffordElement<R>& x) const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (auto& [m, c] : x.coeffs()) {
            h ^= std::hash<uint32_t>()(m) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= std::hash<R>()(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};
