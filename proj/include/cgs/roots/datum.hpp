#pragma once
#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cgs/errors.hpp"
#include "cgs/linalg/linalg.hpp"
#include "cgs/linalg/snf.hpp"

namespace cgs {

// Integer vectors in a fixed basis of the character (or cocharacter) lattice.
using IVec = std::vector<long>;

inline long dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("pairing of vectors of different lengths");
    return std::inner_product(a.begin(), a.end(), b.begin(), 0L);
}

inline IVec operator+(IVec a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline IVec operator-(IVec a, const IVec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}
inline IVec operator-(IVec a) {
    for (auto& x : a) x = -x;
    return a;
}
inline IVec operator*(long s, IVec a) {
    for (auto& x : a) x *= s;
    return a;
}

inline IVec unit_ivec(size_t r, size_t k) {
    IVec v(r, 0);
    v.at(k) = 1;
    return v;
}

inline std::string str(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// s_{a, a_vee}(x) = x - <x, a_vee> a
inline IVec reflect(const IVec& x, const IVec& a, const IVec& a_vee) { return x - dot(x, a_vee) * a; }

inline Matrix<Integer> integer_rows(const std::vector<IVec>& rows, size_t cols) {
    Matrix<Integer> m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = Integer(rows[i].at(j));
    return m;
}

inline size_t rational_rank(const std::vector<IVec>& rows, size_t cols) {
    if (rows.empty()) return 0;
    Matrix<Rational> m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = Rational(rows[i][j]);
    return rank(m);
}

// Roots and coroots in dual bases; coroots[k] belongs to roots[k].
struct RootDatum {
    std::string label;
    size_t rank = 0;
    std::vector<IVec> roots, coroots;
    std::vector<std::string> char_labels, cochar_labels;
    char family_hint = 0;  // 'A'..'D', breaks B2/C2 and A3/D3 naming ties

    std::set<IVec> root_set() const { return {roots.begin(), roots.end()}; }
    std::set<IVec> coroot_set() const { return {coroots.begin(), coroots.end()}; }
    std::optional<IVec> coroot_of(const IVec& a) const {
        for (size_t k = 0; k < roots.size(); ++k)
            if (roots[k] == a) return coroots[k];
        return std::nullopt;
    }
    bool semisimple() const { return rational_rank(roots, rank) == rank; }
};

// Empty string when both axioms hold, otherwise the first failure.
inline std::string axiom_failure(const RootDatum& d) {
    if (d.roots.size() != d.coroots.size()) return "root and coroot counts differ";
    auto rs = d.root_set();
    auto cs = d.coroot_set();
    if (rs.size() != d.roots.size()) return "repeated root";
    for (size_t k = 0; k < d.roots.size(); ++k) {
        auto& a = d.roots[k];
        auto& av = d.coroots[k];
        if (a.size() != d.rank || av.size() != d.rank) return "vector of wrong length";
        if (dot(a, av) != 2) return "<a, a_vee> != 2 for a = " + str(a);
        if (!rs.count(-a)) return "root set not symmetric at " + str(a);
        for (auto& b : d.roots)
            if (!rs.count(reflect(b, a, av))) return "s_a(roots) escapes at a = " + str(a) + ", b = " + str(b);
        for (auto& bv : d.coroots)
            if (!cs.count(reflect(bv, av, a))) return "s_a_vee(coroots) escapes at a = " + str(a);
    }
    return {};
}

inline bool axioms_hold(const RootDatum& d) { return axiom_failure(d).empty(); }

// Every v with entries in [-bound, bound], <a, v> = 2 and s_{a,v} permuting
// the roots. For a non-semisimple root set v is also required to lie in the
// rational span of the roots, which kills the radical directions.
inline std::vector<IVec> coroot_candidates(const std::vector<IVec>& roots, size_t r, const IVec& a, long bound = 3) {
    std::set<IVec> rs(roots.begin(), roots.end());
    size_t srank = rational_rank(roots, r);
    std::vector<IVec> out;
    IVec v(r, -bound);
    while (true) {
        if (dot(a, v) == 2) {
            bool ok = true;
            for (auto& b : roots)
                if (!rs.count(reflect(b, a, v))) {
                    ok = false;
                    break;
                }
            if (ok && srank < r) {
                auto ext = roots;
                ext.push_back(v);
                ok = rational_rank(ext, r) == srank;
            }
            if (ok) out.push_back(v);
        }
        size_t k = 0;
        while (k < r && v[k] == bound) v[k++] = -bound;
        if (k == r) break;
        ++v[k];
    }
    return out;
}

// Coroots found by search alone, one per root; throws if not unique.
inline std::vector<IVec> search_coroots(const std::vector<IVec>& roots, size_t r, long bound = 3) {
    std::vector<IVec> out;
    for (auto& a : roots) {
        auto c = coroot_candidates(roots, r, a, bound);
        if (c.size() != 1)
            throw DatumError("coroot search for " + str(a) + " found " + std::to_string(c.size()) + " candidates");
        out.push_back(c[0]);
    }
    return out;
}

struct Flags {
    bool semisimple = false;
    bool adjoint = false;
    bool simply_connected = false;
    std::string note;
};

namespace detail {
inline bool unimodular_span(const std::vector<IVec>& rows, size_t r) {
    auto s = smith_normal_form(integer_rows(rows, r));
    if (s.divisors.size() < r) return false;
    for (size_t i = 0; i < r; ++i)
        if (s.divisors[i] != Integer(1)) return false;
    return true;
}
} // namespace detail

inline Flags adjoint_sc_flags(const RootDatum& d) {
    Flags f;
    f.semisimple = d.semisimple();
    if (!f.semisimple) {
        f.note = "reductive, not semisimple: the roots do not span the characters rationally";
        return f;
    }
    f.adjoint = detail::unimodular_span(d.roots, d.rank);
    f.simply_connected = detail::unimodular_span(d.coroots, d.rank);
    return f;
}

// ---- Dynkin classification -------------------------------------------------

using IntMatrix = std::vector<std::vector<long>>;

inline std::vector<IVec> positive_roots(const RootDatum& d) {
    long m = 0;
    for (auto& a : d.roots)
        for (long x : a) m = std::max(m, std::labs(x));
    long N = 2 * m + 1;
    IVec w(d.rank);
    long p = 1;
    for (size_t i = d.rank; i-- > 0;) {
        w[i] = p;
        p *= N;
    }
    std::vector<IVec> out;
    for (auto& a : d.roots)
        if (dot(a, w) > 0) out.push_back(a);
    return out;
}

inline std::vector<IVec> simple_roots(const RootDatum& d) {
    auto pos = positive_roots(d);
    std::set<IVec> ps(pos.begin(), pos.end());
    std::vector<IVec> out;
    for (auto& a : pos) {
        bool decomposable = false;
        for (auto& b : pos)
            if (b != a && ps.count(a - b)) {
                decomposable = true;
                break;
            }
        if (!decomposable) out.push_back(a);
    }
    return out;
}

// C_ij = <a_j, a_i_vee>
inline IntMatrix cartan_matrix(const RootDatum& d, const std::vector<IVec>& simple) {
    IntMatrix c(simple.size(), std::vector<long>(simple.size()));
    for (size_t i = 0; i < simple.size(); ++i) {
        auto av = d.coroot_of(simple[i]);
        if (!av) throw DatumError("simple root " + str(simple[i]) + " is not a root");
        for (size_t j = 0; j < simple.size(); ++j) c[i][j] = dot(simple[j], *av);
    }
    return c;
}

inline IntMatrix cartan_template(char t, size_t k) {
    IntMatrix c(k, std::vector<long>(k, 0));
    for (size_t i = 0; i < k; ++i) c[i][i] = 2;
    auto link = [&](size_t i, size_t j) { c[i][j] = c[j][i] = -1; };
    switch (t) {
    case 'A':
        for (size_t i = 0; i + 1 < k; ++i) link(i, i + 1);
        break;
    case 'B':  // last node short
        for (size_t i = 0; i + 1 < k; ++i) link(i, i + 1);
        if (k >= 2) c[k - 1][k - 2] = -2;
        break;
    case 'C':  // last node long
        for (size_t i = 0; i + 1 < k; ++i) link(i, i + 1);
        if (k >= 2) c[k - 2][k - 1] = -2;
        break;
    case 'D':  // chain 0..k-2, node k-1 attached to k-3
        if (k < 3) throw ClassificationError("D_k needs k >= 3");
        for (size_t i = 0; i + 2 < k; ++i) link(i, i + 1);
        link(k - 3, k - 1);
        break;
    default: throw ClassificationError(std::string("unknown template ") + t);
    }
    return c;
}

namespace detail {
inline bool matches_up_to_permutation(const IntMatrix& c, const IntMatrix& t) {
    size_t k = c.size();
    std::vector<size_t> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i)
            for (size_t j = 0; j < k && ok; ++j) ok = c[p[i]][p[j]] == t[i][j];
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Name of one irreducible component. Rank 1 is always A1; isomorphic
// coincidences (B2 = C2, A3 = D3) take the hinted letter when it fits.
inline std::string component_type(const IntMatrix& c, char hint) {
    size_t k = c.size();
    if (k == 1) return "A1";
    std::vector<char> letters{'A', 'B', 'C', 'D'};
    if (hint) {
        letters.erase(std::remove(letters.begin(), letters.end(), hint), letters.end());
        letters.insert(letters.begin(), hint);
    }
    for (char t : letters) {
        if (t == 'D' && k < 3) continue;
        if (matches_up_to_permutation(c, cartan_template(t, k))) return t + std::to_string(k);
    }
    throw ClassificationError("unrecognized Cartan matrix component of rank " + std::to_string(k));
}
} // namespace detail

struct DynkinInfo {
    std::vector<IVec> simple;
    IntMatrix cartan;
    std::string type;  // "A3", "B2", "A1xA1", "" for a torus
};

inline DynkinInfo cartan_and_type(const RootDatum& d) {
    if (auto f = axiom_failure(d); !f.empty()) throw DatumError("classification of an invalid datum: " + f);
    DynkinInfo out;
    out.simple = simple_roots(d);
    out.cartan = cartan_matrix(d, out.simple);
    size_t k = out.simple.size();
    std::vector<int> comp(k, -1);
    std::vector<std::vector<size_t>> comps;
    for (size_t s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        comps.emplace_back();
        std::deque<size_t> q{s};
        comp[s] = int(comps.size() - 1);
        while (!q.empty()) {
            size_t i = q.front();
            q.pop_front();
            comps.back().push_back(i);
            for (size_t j = 0; j < k; ++j)
                if (comp[j] < 0 && out.cartan[i][j] != 0) {
                    comp[j] = comp[s];
                    q.push_back(j);
                }
        }
    }
    std::vector<std::string> names;
    for (auto& nodes : comps) {
        std::sort(nodes.begin(), nodes.end());
        IntMatrix sub(nodes.size(), std::vector<long>(nodes.size()));
        for (size_t i = 0; i < nodes.size(); ++i)
            for (size_t j = 0; j < nodes.size(); ++j) sub[i][j] = out.cartan[nodes[i]][nodes[j]];
        names.push_back(detail::component_type(sub, d.family_hint));
    }
    std::sort(names.begin(), names.end());
    for (size_t i = 0; i < names.size(); ++i) out.type += (i ? "x" : "") + names[i];
    return out;
}

// S is a base: as many elements as the semisimple rank, and every root is an
// integer combination of S with all coefficients of one sign.
inline bool is_base(const RootDatum& d, const std::vector<IVec>& S) {
    auto rs = d.root_set();
    if (S.size() != rational_rank(d.roots, d.rank) || rational_rank(S, d.rank) != S.size()) return false;
    for (auto& s : S)
        if (!rs.count(s)) return false;
    Matrix<Rational> a(d.rank, S.size());
    for (size_t i = 0; i < d.rank; ++i)
        for (size_t j = 0; j < S.size(); ++j) a(i, j) = Rational(S[j][i]);
    for (auto& r : d.roots) {
        Vec<Rational> b(d.rank);
        for (size_t i = 0; i < d.rank; ++i) b[i] = Rational(r[i]);
        auto c = solve(a, b);
        if (!c) return false;
        bool pos = false, neg = false;
        for (auto& x : *c) {
            if (!x.is_integer()) return false;
            if (x.num().sign() > 0) pos = true;
            if (x.num().sign() < 0) neg = true;
        }
        if (pos && neg) return false;
    }
    return true;
}

// Breadth-first search of the Weyl orbit of the base `from` for `to`.
inline bool weyl_equivalent(const RootDatum& d, std::vector<IVec> from, std::vector<IVec> to, size_t budget = 100000) {
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    std::set<std::vector<IVec>> seen{from};
    std::deque<std::vector<IVec>> q{from};
    while (!q.empty()) {
        auto s = q.front();
        q.pop_front();
        if (s == to) return true;
        for (size_t k = 0; k < d.roots.size(); ++k) {
            std::vector<IVec> t;
            for (auto& x : s) t.push_back(reflect(x, d.roots[k], d.coroots[k]));
            std::sort(t.begin(), t.end());
            if (seen.insert(t).second) {
                if (seen.size() > budget) throw BudgetError("Weyl orbit search exceeded budget");
                q.push_back(std::move(t));
            }
        }
    }
    return false;
}

// ---- centers ---------------------------------------------------------------

// prod mu_{d_i}, stored by invariant factors d_1 | d_2 | ... (all > 1).
struct FiniteDiagGroup {
    std::vector<long> factors;

    long order() const {
        long o = 1;
        for (long d : factors) o *= d;
        return o;
    }
    std::string name() const {
        if (factors.empty()) return "trivial";
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) s += (i ? "×" : "") + std::string("μ") + std::to_string(factors[i]);
        return s;
    }
    std::string ascii() const {
        if (factors.empty()) return "trivial";
        std::string s;
        for (size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + std::string("mu") + std::to_string(factors[i]);
        return s;
    }
    friend bool operator==(const FiniteDiagGroup&, const FiniteDiagGroup&) = default;
};

namespace detail {
inline FiniteDiagGroup from_divisors(const SmithForm& s, size_t expected) {
    FiniteDiagGroup g;
    size_t nonzero = 0;
    for (auto& d : s.divisors)
        if (!d.is_zero()) ++nonzero;
    if (nonzero < expected) throw DatumError("rank-deficient lattice map: the kernel is positive-dimensional");
    for (auto& d : s.divisors)
        if (d.abs() != Integer(1)) g.factors.push_back(d.abs().to_long());
    return g;
}
} // namespace detail

// Cartier dual of X / Z.roots.
inline FiniteDiagGroup center_from_datum(const RootDatum& d) {
    if (!d.semisimple()) throw DatumError("center_from_datum needs a semisimple datum");
    return detail::from_divisors(smith_normal_form(integer_rows(d.roots, d.rank)), d.rank);
}

// Kernel of the torus map whose characters pull back along the rows of c.
inline FiniteDiagGroup center_from_torus_map(const IntMatrix& c) {
    size_t r = c.size();
    for (auto& row : c)
        if (row.size() != r) throw DimensionMismatch("torus map must be square");
    return detail::from_divisors(smith_normal_form(integer_rows(c, r)), r);
}

} // namespace cgs
