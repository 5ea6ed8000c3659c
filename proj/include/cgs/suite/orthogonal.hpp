#pragma once
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgs/groups.hpp"
#include "cgs/quad/cartan_dieudonne.hpp"
#include "cgs/suite/algebra.hpp"
#include "cgs/suite/sample.hpp"

namespace cgs::suite {

template <Field K>
struct NamedForm {
    std::string name;
    QuadraticModule<K> q;
};

template <Field K>
std::vector<K> as_field(std::initializer_list<long> xs) {
    std::vector<K> v;
    for (long x : xs) v.push_back(K(x));
    return v;
}

template <FiniteRing K>
using MatrixKey = std::vector<K>;

template <FiniteRing K>
std::vector<Matrix<K>> orthogonal_group(const QuadraticModule<K>& q) {
    return enumerate(ClassicalGroup<K>(GroupId{Family::O, q.rank()}, q)).matrices;
}

// ---- reflections -------------------------------------------------------------

template <Field K>
Outcome reflection_outcome(const std::string& id, const QuadraticModule<K>& q) {
    auto g = case_rng(id);
    bool even = q.rank() % 2 == 0;
    std::optional<DicksonContext<K>> dickson;
    if (even) dickson.emplace(q);
    auto alg = clifford_algebra(q);
    size_t good = 0;
    const size_t samples = 200;
    for (size_t s = 0; s < samples; ++s) {
        auto v = sample_anisotropic(g, q);
        auto t = reflection(q, v);
        bool ok = det(t) == K(-1);
        if (even) ok = ok && (*dickson)(t) == 1;
        ok = ok && spinor_norm(CliffordElement<K>::vector(alg, v)) == -q.value(v);
        good += ok;
    }
    return expect_all(even ? "with det -1, Dickson 1, sn(v) = -q(v)" : "with det -1, sn(v) = -q(v)", good, samples);
}

template <Field K>
std::vector<NamedForm<K>> reflection_forms() {
    return {{"hyp2", hyperbolic<K>(2)},
            {"hyp3", hyperbolic<K>(3)},
            {"hyp4", hyperbolic<K>(4)},
            {"diag1112", diagonal_form<K>(as_field<K>({1, 1, 1, 2}))}};
}

template <Field K>
void reflection_cases_for(std::vector<CaseSpec>& out) {
    std::string t = field_tag<K>();
    for (auto& f : reflection_forms<K>()) {
        std::string id = "c07.reflections." + t + "." + f.name;
        out.push_back({id, "tau_v has det -1, Dickson 1 and spinor norm -q(v)", t, f.q.rank(),
                       [id, q = f.q] { return reflection_outcome(id, q); }});
    }
}

inline std::vector<CaseSpec> reflection_cases() {
    std::vector<CaseSpec> out;
    reflection_cases_for<Rational>(out);
    reflection_cases_for<F3>(out);
    reflection_cases_for<F5>(out);
    out.push_back({"c07.dickson-det.f3.hyp4", "Dickson invariant = (1 - det)/2 away from characteristic 2", "f3", 4, [] {
                       auto q = hyperbolic<F3>(4);
                       DicksonContext<F3> dickson(q);
                       auto group = orthogonal_group(q);
                       size_t good = 0;
                       for (auto& g : group) good += dickson(g) == (det(g) == F3(1) ? 0 : 1);
                       return Outcome{good == group.size() && group.size() == 1152, "1152/1152 elements of O agree",
                                      std::to_string(good) + "/" + std::to_string(group.size()) + " elements of O agree"};
                   }});
    return out;
}

// ---- Cartan-Dieudonne ----------------------------------------------------------

// Every element factors into reflections with exact reconstruction, and the
// parity of the factor count is a homomorphism (hence a class function)
// matching the Dickson invariant in even rank and (1 - det)/2 in odd rank
// away from characteristic 2.
template <FiniteRing K>
Outcome cartan_dieudonne_outcome(const std::string& id, const QuadraticModule<K>& q) {
    auto group = orthogonal_group(q);
    std::map<MatrixKey<K>, int> parity;
    size_t rebuilt = 0, matched = 0;
    bool even = q.rank() % 2 == 0;
    bool char2 = K::characteristic == 2;
    std::optional<DicksonContext<K>> dickson;
    if (even) dickson.emplace(q);
    for (auto& g : group) {
        auto vs = cartan_dieudonne(q, g);
        rebuilt += product_of_reflections(q, vs) == g;
        int p = int(vs.size() % 2);
        parity[g.entries()] = p;
        if (even) matched += p == (*dickson)(g);
        else if (!char2) matched += p == (det(g) == K(1) ? 0 : 1);
        else ++matched;  // no Dickson invariant in odd rank over F2; covered by the homomorphism test
    }
    auto rng = case_rng(id);
    size_t hom_checks = 0, hom_good = 0;
    for (int s = 0; s < 8; ++s) {
        auto& h = group[std::uniform_int_distribution<size_t>(0, group.size() - 1)(rng)];
        auto hi = inverse(h);
        int ph = parity.at(h.entries());
        for (auto& g : group) {
            int pg = parity.at(g.entries());
            hom_good += parity.at((g * h).entries()) == (pg ^ ph);
            hom_good += parity.at((h * g * hi).entries()) == pg;
            hom_checks += 2;
        }
    }
    std::string tail = even ? "Dickson" : char2 ? "itself under conjugation" : "(1 - det)/2";
    size_t N = group.size();
    bool ok = rebuilt == N && matched == N && hom_good == hom_checks;
    return {ok,
            std::to_string(N) + "/" + std::to_string(N) + " rebuilt, parity multiplicative and matching " + tail,
            std::to_string(rebuilt) + "/" + std::to_string(N) + " rebuilt, " + std::to_string(matched) + "/" +
                std::to_string(N) + " parity matches, " + std::to_string(hom_good) + "/" + std::to_string(hom_checks) +
                " product and conjugation checks"};
}

inline std::vector<CaseSpec> cartan_dieudonne_cases() {
    std::vector<CaseSpec> out;
    auto add = [&]<class K>(const std::string& name, const QuadraticModule<K>& q) {
        std::string id = "c08.cartan-dieudonne." + field_tag<K>() + "." + name;
        out.push_back({id, "Cartan-Dieudonne factorization and its parity", field_tag<K>(), q.rank(),
                       [id, q] { return cartan_dieudonne_outcome(id, q); }});
    };
    for (size_t r = 1; r <= 4; ++r) {
        add("hyp" + std::to_string(r), hyperbolic<F3>(r));
        add("hyp" + std::to_string(r), hyperbolic<F5>(r));
    }
    add("diag11", diagonal_form<F3>(as_field<F3>({1, 1})));
    add("diag12", diagonal_form<F5>(as_field<F5>({1, 2})));
    add("diag112", diagonal_form<F3>(as_field<F3>({1, 1, 2})));
    add("hyp3", hyperbolic<F2>(3));
    add("hyp5", hyperbolic<F2>(5));
    return out;
}

// ---- enumeration and the spinor sequences ----------------------------------------

template <FiniteRing K>
size_t order_of(Family f, size_t n) {
    return enumerate(ClassicalGroup<K>(GroupId{f, n})).size();
}

// Point-level surrogates of the exact sequences through Pin and Spin:
// theta(g) is the square class of sn(x) for any x in Gamma over g.
template <FiniteRing K>
struct SpinorPicture {
    std::set<MatrixKey<K>> orthogonal, target, image_gamma, image_pin, image_spin;
    std::map<MatrixKey<K>, int> theta, dickson;
    bool theta_well_defined = true;
    size_t kernel_pin = 0, kernel_spin = 0;
    bool kernels_are_signs = true;
};

template <FiniteRing K>
SpinorPicture<K> spinor_picture(size_t n) {
    SpinorPicture<K> s;
    auto q = hyperbolic<K>(n);
    for (auto& g : enumerate(ClassicalGroup<K>(GroupId{Family::O, n})).matrices) s.orthogonal.insert(g.entries());
    for (auto& g : enumerate(ClassicalGroup<K>(GroupId{n % 2 ? Family::SO : Family::O, n})).matrices)
        s.target.insert(g.entries());
    std::optional<DicksonContext<K>> dickson;
    if (n % 2 == 0) dickson.emplace(q);
    auto gamma = enumerate(ClassicalGroup<K>(GroupId{Family::Gamma, n}));
    for (auto& x : gamma.clifford) {
        auto g = vector_action(x);
        int cls = is_square(spinor_norm(x)) ? 0 : 1;
        auto key = g.entries();
        s.image_gamma.insert(key);
        auto [it, fresh] = s.theta.emplace(key, cls);
        if (!fresh && it->second != cls) s.theta_well_defined = false;
        if (dickson && fresh) s.dickson[key] = (*dickson)(g);
    }
    // in odd rank the central odd element w also acts trivially
    std::optional<CliffordElement<K>> w;
    if (n % 2) w = half_determinant(q).w;
    auto is_sign = [](const CliffordElement<K>& x) { return x.is_scalar() && (x.coeff(0) == K(1) || x.coeff(0) == K(-1)); };
    auto kernel = [&](Family f, size_t& count, std::set<MatrixKey<K>>& image) {
        for (auto& x : enumerate(ClassicalGroup<K>(GroupId{f, n})).clifford) {
            auto g = vector_action(x);
            image.insert(g.entries());
            if (g.is_identity()) {
                ++count;
                if (!is_sign(x) && !(w && is_sign(x * *w))) s.kernels_are_signs = false;
                if (f == Family::Spin && !is_sign(x)) s.kernels_are_signs = false;
            }
        }
    };
    kernel(Family::Pin, s.kernel_pin, s.image_pin);
    kernel(Family::Spin, s.kernel_spin, s.image_spin);
    return s;
}

template <FiniteRing K>
std::vector<CaseSpec> spinor_cases_for(size_t n) {
    std::string t = field_tag<K>();
    std::string base = "c09.spinor." + t + ".r" + std::to_string(n) + ".";
    std::string target = n % 2 ? "SO" : "O";
    std::vector<CaseSpec> out;
    out.push_back({base + "gamma-onto", "Gamma maps onto " + target + " by the vector action", t, n, [n, target] {
                       auto s = spinor_picture<K>(n);
                       return Outcome{s.image_gamma == s.target,
                                      "image = " + target + " (" + std::to_string(s.target.size()) + ")",
                                      "image " + std::to_string(s.image_gamma.size()) +
                                          (s.image_gamma == s.target ? " = " : " != ") + target};
                   }});
    out.push_back({base + "pin-kernel-theta", "Pin maps onto the kernel of the spinor norm on " + target, t, n, [n] {
                       auto s = spinor_picture<K>(n);
                       std::set<MatrixKey<K>> ker;
                       for (auto& [g, c] : s.theta)
                           if (c == 0) ker.insert(g);
                       bool ok = s.theta_well_defined && s.image_pin == ker && 2 * ker.size() == s.image_gamma.size();
                       return Outcome{ok, "theta well defined, image(Pin) = ker theta of index 2",
                                      std::string(s.theta_well_defined ? "theta well defined" : "theta not well defined") +
                                          ", image(Pin) " + std::to_string(s.image_pin.size()) + ", ker theta " +
                                          std::to_string(ker.size()) + ", image(Gamma) " +
                                          std::to_string(s.image_gamma.size())};
                   }});
    out.push_back({base + "spin-kernel", "Spin maps onto ker theta inside ker Dickson", t, n, [n] {
                       auto s = spinor_picture<K>(n);
                       std::set<MatrixKey<K>> ker;
                       for (auto& [g, c] : s.theta)
                           if (c == 0 && (n % 2 == 1 || s.dickson.at(g) == 0)) ker.insert(g);
                       bool inside = true;
                       for (auto& g : s.image_spin)
                           if (n % 2 == 0 && s.dickson.at(g) != 0) inside = false;
                       return Outcome{inside && s.image_spin == ker,
                                      "image(Spin) = ker theta in ker Dickson (" + std::to_string(ker.size()) + ")",
                                      std::string(inside ? "inside" : "not inside") + " ker Dickson, image(Spin) " +
                                          std::to_string(s.image_spin.size())};
                   }});
    std::string pin_kernel = n % 2 ? "{1, -1, w, -w}" : "{1, -1}";
    out.push_back({base + "kernels", "kernel of Spin on O is mu_2", t, n, [n, pin_kernel] {
                       auto s = spinor_picture<K>(n);
                       size_t pin_size = n % 2 ? 4 : 2;
                       return Outcome{s.kernel_pin == pin_size && s.kernel_spin == 2 && s.kernels_are_signs,
                                      "ker Spin = {1, -1}, ker Pin = " + pin_kernel,
                                      "ker Pin " + std::to_string(s.kernel_pin) + ", ker Spin " +
                                          std::to_string(s.kernel_spin) +
                                          (s.kernels_are_signs ? ", of the expected form" : ", not of the expected form")};
                   }});
    return out;
}

inline std::vector<CaseSpec> enumeration_cases() {
    std::vector<CaseSpec> out;
    auto so_index = [&]<class K>(size_t n) {
        out.push_back({"c09.so-index." + field_tag<K>() + ".r" + std::to_string(n), "|SO| = |O|/2 in odd rank",
                       field_tag<K>(), n, [n] {
                           size_t o = order_of<K>(Family::O, n), so = order_of<K>(Family::SO, n);
                           return Outcome{2 * so == o, "2|SO| = |O|",
                                          "|O| = " + std::to_string(o) + ", |SO| = " + std::to_string(so)};
                       }});
    };
    so_index.template operator()<F3>(3);
    so_index.template operator()<F3>(5);
    so_index.template operator()<F5>(3);
    for (size_t n : {2u, 4u})
        out.push_back({"c09.oplus-index.f2.r" + std::to_string(n), "|O+| = |O|/2 over F2 with det constant", "f2", n, [n] {
                           auto o = enumerate(ClassicalGroup<F2>(GroupId{Family::O, n}));
                           size_t op = order_of<F2>(Family::Oplus, n);
                           size_t det_one = 0;
                           for (auto& g : o.matrices) det_one += det(g) == F2(1);
                           return Outcome{2 * op == o.size() && det_one == o.size(), "2|O+| = |O|, det = 1 on all of O",
                                          "|O| = " + std::to_string(o.size()) + ", |O+| = " + std::to_string(op) +
                                              ", det 1 on " + std::to_string(det_one)};
                       }});
    for (auto& c : spinor_cases_for<F3>(3)) out.push_back(c);
    for (auto& c : spinor_cases_for<F3>(4)) out.push_back(c);
    for (auto& c : spinor_cases_for<F5>(3)) out.push_back(c);
    return out;
}

// ---- quadratic pairs -----------------------------------------------------------------

template <Field K>
Outcome trace_identity_outcome(size_t n) {
    auto p = split_quadratic_pair<K>(n);
    size_t N = 2 * n, good = 0;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            auto a = Matrix<K>::unit(N, N, i, j);
            good += p.f(a + p.eta(a)) == a.trace();
        }
    return expect_all("matrix units with f(a + sigma(a)) = tr(a)", good, N * N);
}

template <Field K>
Outcome phi_outcome(const std::string& id, size_t n) {
    auto q = hyperbolic<K>(2 * n);
    auto p = pair_from_form(q);
    auto rng = case_rng(id);
    size_t good = 0;
    for (int s = 0; s < 100; ++s) {
        auto m = sample_vector<K>(rng, 2 * n);
        good += p.f(phi(q, m, m)) == q.value(m);
    }
    return expect_all("vectors with f(phi(m, m)) = q(m)", good, 100);
}

// The group cut out by the pair conditions alone (eta(g) g = 1 and
// f(g s eta(g)) = f(s)), searched column by column, against O(q).
inline Outcome pair_versus_form_outcome() {
    using K = F3;
    auto q = hyperbolic<K>(4);
    auto p = pair_from_form(q);
    size_t n = 4;
    std::vector<Vec<K>> nonzero;
    for (auto& v : all_vectors<K>(n))
        if (std::any_of(v.begin(), v.end(), [](const K& x) { return !x.is_zero(); })) nonzero.push_back(v);
    std::set<MatrixKey<K>> by_pair;
    size_t nodes = 0;
    detail::column_search<K>(
        n, [&](size_t) -> const std::vector<Vec<K>>& { return nonzero; },
        [&](const std::vector<Vec<K>>& cols, const Vec<K>& c) {
            size_t i = cols.size();
            for (size_t j = 0; j < i; ++j)
                if (detail::bilinear(p.h, cols[j], c) != p.h(j, i)) return false;
            return detail::bilinear(p.h, c, c) == p.h(i, i);
        },
        [&](const Matrix<K>& g) {
            if (!(p.eta(g) * g).is_identity()) return;
            auto gt = p.eta(g);
            for (auto& [s, fs] : p.f_table)
                if (p.f(g * s * gt) != fs) return;
            by_pair.insert(g.entries());
        },
        size_t(50'000'000), nodes);
    std::set<MatrixKey<K>> by_form;
    for (auto& g : orthogonal_group(q)) by_form.insert(g.entries());
    size_t preserve = 0;
    for (auto& e : by_pair) preserve += in_orthogonal_group(q, Matrix<K>(n, n, e));
    bool ok = by_pair == by_form && preserve == by_pair.size();
    return {ok, "pair conditions and q-preservation give the same " + std::to_string(by_form.size()) + " elements",
            std::to_string(by_pair.size()) + " by pair conditions, " + std::to_string(by_form.size()) + " by the form, " +
                (by_pair == by_form ? "equal" : "different")};
}

inline std::vector<CaseSpec> quadratic_pair_cases() {
    std::vector<CaseSpec> out;
    auto trace = [&]<class K>(size_t n) {
        out.push_back({"c10.trace." + field_tag<K>() + "." + nid(n), "f(a + sigma(a)) = trd(a) for the split pair",
                       field_tag<K>(), n, [n] { return trace_identity_outcome<K>(n); }});
    };
    auto phi_case = [&]<class K>(size_t n) {
        std::string id = "c10.phi." + field_tag<K>() + "." + nid(n);
        out.push_back({id, "f_q(phi_q(m m)) = q(m)", field_tag<K>(), n, [id, n] { return phi_outcome<K>(id, n); }});
    };
    for (size_t n = 1; n <= 4; ++n) {
        trace.template operator()<Rational>(n);
        trace.template operator()<F2>(n);
        trace.template operator()<F3>(n);
    }
    for (size_t n = 1; n <= 3; ++n) {
        phi_case.template operator()<Rational>(n);
        phi_case.template operator()<F2>(n);
        phi_case.template operator()<F3>(n);
        phi_case.template operator()<F5>(n);
    }
    out.push_back({"c10.pair-vs-form.f3.r4", "O by pair conditions = O by form preservation", "f3", 4,
                   [] { return pair_versus_form_outcome(); }});
    return out;
}

} // namespace cgs::suite
