#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cgs/groups/groups.hpp"
#include "cgs/roots/torus.hpp"

namespace cgs {

// The split groups whose root data are tabulated. N is the matrix size, or
// the rank of the form for the spin groups.
enum class RootFamily { GL, SL, PGL, SO, SpinOdd, Sp, PGSp, PGOplus, SpinEven };

struct RootFamilyInfo {
    RootFamily family;
    std::string name;
    char letter;
};

inline const std::vector<RootFamilyInfo>& root_families() {
    static const std::vector<RootFamilyInfo> v{
        {RootFamily::GL, "gl", 'A'},   {RootFamily::SL, "sl", 'A'},     {RootFamily::PGL, "pgl", 'A'},
        {RootFamily::SO, "so", 'B'},   {RootFamily::SpinOdd, "spin", 'B'}, {RootFamily::Sp, "sp", 'C'},
        {RootFamily::PGSp, "pgsp", 'C'}, {RootFamily::PGOplus, "pgo+", 'D'}, {RootFamily::SpinEven, "spin-even", 'D'}};
    return v;
}

inline const RootFamilyInfo& info(RootFamily f) {
    for (auto& i : root_families())
        if (i.family == f) return i;
    throw UnsupportedCase("unknown root family");
}

inline std::optional<RootFamily> parse_root_family(const std::string& s) {
    for (auto& i : root_families())
        if (i.name == s) return i.family;
    if (s == "pgoplus") return RootFamily::PGOplus;
    return std::nullopt;
}

inline constexpr size_t kMaxRootN = 8;

// Empty when (f, N) is supported.
inline std::string root_case_problem(RootFamily f, size_t N) {
    if (N > kMaxRootN) return "n = " + std::to_string(N) + " exceeds the budget " + std::to_string(kMaxRootN);
    switch (f) {
    case RootFamily::GL: return N >= 1 ? "" : "n must be at least 1";
    case RootFamily::SL:
    case RootFamily::PGL: return N >= 2 ? "" : "n must be at least 2";
    case RootFamily::SO:
    case RootFamily::SpinOdd: return N % 2 == 1 && N >= 3 ? "" : "n must be odd and at least 3";
    case RootFamily::Sp:
    case RootFamily::PGSp: return N % 2 == 0 && N >= 2 ? "" : "n must be even and at least 2";
    case RootFamily::PGOplus:
    case RootFamily::SpinEven: return N % 2 == 0 && N >= 4 ? "" : "n must be even and at least 4";
    }
    return "unsupported";
}

inline void require_root_case(RootFamily f, size_t N) {
    if (auto p = root_case_problem(f, N); !p.empty()) throw UnsupportedCase(info(f).name + " " + std::to_string(N) + ": " + p);
}

inline GroupId group_of(RootFamily f, size_t N) {
    switch (f) {
    case RootFamily::GL: return {Family::GL, N};
    case RootFamily::SL: return {Family::SL, N};
    case RootFamily::PGL: return {Family::PGL, N};
    case RootFamily::SO: return {Family::SO, N};
    case RootFamily::Sp: return {Family::Sp, N};
    case RootFamily::PGSp: return {Family::PGSp, N};
    case RootFamily::PGOplus: return {Family::PGOplus, N};
    case RootFamily::SpinOdd:
    case RootFamily::SpinEven: return {Family::Spin, N};
    }
    throw UnsupportedCase("unknown root family");
}

inline size_t torus_rank(RootFamily f, size_t N) {
    switch (f) {
    case RootFamily::GL: return N;
    case RootFamily::SL:
    case RootFamily::PGL: return N - 1;
    case RootFamily::SO:
    case RootFamily::SpinOdd: return (N - 1) / 2;
    default: return N / 2;
    }
}

inline std::vector<std::string> character_labels(RootFamily f, size_t N) {
    size_t r = torus_rank(f, N);
    std::vector<std::string> out;
    for (size_t k = 0; k < r; ++k) {
        switch (f) {
        case RootFamily::SL: out.push_back("tbar" + std::to_string(k + 1)); break;
        case RootFamily::PGL: out.push_back("t" + std::to_string(k + 1) + "-t" + std::to_string(k + 2)); break;
        case RootFamily::PGOplus: out.push_back("t" + std::to_string(k)); break;
        default: out.push_back("t" + std::to_string(k + 1));
        }
    }
    return out;
}

namespace detail {
// Stored generator index of e_k: odd rank keeps e_0..e_{2n}, even rank
// numbers e_1..e_{2n}.
inline size_t gen(size_t N, size_t k) { return N % 2 ? k : k - 1; }
} // namespace detail

inline Torus make_torus(RootFamily f, size_t N) {
    require_root_case(f, N);
    Torus T;
    T.rank = torus_rank(f, N);
    size_t r = T.rank;
    for (auto& l : character_labels(f, N)) T.cochar_labels.push_back(l + "v");
    auto e = [r](size_t k) { return unit_ivec(r, k); };
    IVec zero(r, 0);
    switch (f) {
    case RootFamily::GL:
        for (size_t k = 0; k < N; ++k) T.diag.push_back(e(k));
        break;
    case RootFamily::SL: {
        for (size_t k = 0; k + 1 < N; ++k) T.diag.push_back(e(k));
        T.diag.push_back(IVec(r, -1));
        break;
    }
    case RootFamily::PGL:  // d_k = beta_k ... beta_{N-1}
        for (size_t k = 0; k < N; ++k) {
            IVec d(r, 0);
            for (size_t j = k; j < r; ++j) d[j] = 1;
            T.diag.push_back(d);
        }
        break;
    case RootFamily::SO:  // (1, a1, a1^-1, ...)
        T.diag.push_back(zero);
        for (size_t i = 0; i < r; ++i) {
            T.diag.push_back(e(i));
            T.diag.push_back(-e(i));
        }
        break;
    case RootFamily::Sp:
        for (size_t i = 0; i < r; ++i) T.diag.push_back(e(i));
        for (size_t i = 0; i < r; ++i) T.diag.push_back(-e(i));
        break;
    case RootFamily::PGSp: {  // (1, t1, ..., t_{n-1}, t_n, t_n/t1, ..., t_n/t_{n-1})
        size_t n = r;
        T.diag.push_back(zero);
        for (size_t i = 0; i + 1 < n; ++i) T.diag.push_back(e(i));
        T.diag.push_back(e(n - 1));
        for (size_t i = 0; i + 1 < n; ++i) T.diag.push_back(e(n - 1) - e(i));
        break;
    }
    case RootFamily::PGOplus: {  // (a0 a1, a1^-1, ..., a0 a_{n-1}, a_{n-1}^-1, a0, 1)
        size_t n = r;
        for (size_t i = 1; i < n; ++i) {
            T.diag.push_back(e(0) + e(i));
            T.diag.push_back(-e(i));
        }
        T.diag.push_back(e(0));
        T.diag.push_back(zero);
        break;
    }
    case RootFamily::SpinOdd:
    case RootFamily::SpinEven: {
        using detail::gen;
        T.form = hyperbolic<Rational>(N).coeffs;
        size_t g1 = gen(N, 1), g2 = gen(N, 2);
        T.cochars.push_back({{1, {g1, g2}}, {-1, {g2, g1}}});
        for (size_t i = 2; i <= r; ++i) {
            size_t a = gen(N, 2 * i - 1), b = gen(N, 2 * i);
            T.cochars.push_back({{1, {g1, g2, a, b}}, {0, {g1, g2, b, a}}, {0, {g2, g1, a, b}}, {-1, {g2, g1, b, a}}});
        }
        break;
    }
    }
    return T;
}

// One transcribed root: its root vector X, root, coroot, and the
// exponential exp(lambda) = 1 + lambda X + lambda^2 Q.
struct RootEntry {
    std::string label;
    IVec root, coroot;
    Matrix<Rational> x, quad;
    std::vector<size_t> word;  // Clifford root vectors e_a e_b, stored indices

    bool is_clifford() const { return !word.empty(); }
};

namespace detail {

inline std::string idx(size_t a, size_t b) { return std::to_string(a) + "," + std::to_string(b); }

struct TableBuilder {
    size_t N, r;
    std::vector<RootEntry> out;

    Matrix<Rational> E(size_t a, size_t b) const { return Matrix<Rational>::unit(N, N, a, b); }
    // 1-based elementary matrix
    Matrix<Rational> E1(size_t a, size_t b) const { return E(a - 1, b - 1); }
    IVec e(size_t k) const { return unit_ivec(r, k); }
    IVec zero() const { return IVec(r, 0); }

    void mat(std::string label, Matrix<Rational> x, IVec root, IVec coroot, Matrix<Rational> quad = {}) {
        RootEntry en;
        en.label = std::move(label);
        en.x = std::move(x);
        en.quad = quad.rows() ? std::move(quad) : Matrix<Rational>(N, N);
        en.root = std::move(root);
        en.coroot = std::move(coroot);
        out.push_back(std::move(en));
    }
    // e_a e_b in 1-based indices
    void cl(size_t a, size_t b, IVec root, IVec coroot) {
        RootEntry en;
        en.label = "e" + std::to_string(a) + "e" + std::to_string(b);
        en.word = {gen(N, a), gen(N, b)};
        en.root = std::move(root);
        en.coroot = std::move(coroot);
        out.push_back(std::move(en));
    }
};

} // namespace detail

// Root vectors, roots and coroots as listed for each family, in the
// character basis of make_torus. Indices in the comments are 1-based.
inline std::vector<RootEntry> root_table(RootFamily f, size_t N) {
    require_root_case(f, N);
    detail::TableBuilder t{N, torus_rank(f, N), {}};
    size_t r = t.r;
    auto e = [&](size_t k) { return t.e(k); };
    auto E1 = [&](size_t a, size_t b) { return t.E1(a, b); };
    using detail::idx;
    switch (f) {
    case RootFamily::GL:
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
                if (i != j) t.mat("E" + idx(i + 1, j + 1), t.E(i, j), e(i) - e(j), e(i) - e(j));
        break;
    case RootFamily::SL: {
        // tbar_N = -(tbar_1 + ... + tbar_{N-1}); coroots e_i - e_j with e_N = 0
        auto bar = [&](size_t i) { return i + 1 < N ? e(i) : IVec(r, -1); };
        auto cv = [&](size_t i) { return i + 1 < N ? e(i) : t.zero(); };
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j)
                if (i != j) t.mat("E" + idx(i + 1, j + 1), t.E(i, j), bar(i) - bar(j), cv(i) - cv(j));
        break;
    }
    case RootFamily::PGL:
        // E_ij, i < j: b_i + ... + b_{j-1}; coroot c_k = d(k,i) - d(k+1,i) - d(k,j) + d(k+1,j)
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) {
                if (i == j) continue;
                IVec root = t.zero(), co = t.zero();
                for (size_t k = std::min(i, j); k < std::max(i, j); ++k) root[k] = i < j ? 1 : -1;
                for (size_t k = 0; k < r; ++k)
                    co[k] = long(k == i) - long(k + 1 == i) - long(k == j) + long(k + 1 == j);
                t.mat("E" + idx(i + 1, j + 1), t.E(i, j), root, co);
            }
        break;
    case RootFamily::SO: {
        size_t n = r;
        auto E = [&](size_t a, size_t b) { return t.E(a, b); };  // rows e_0 .. e_{2n}
        for (size_t i = 1; i <= n; ++i) {
            IVec ti = e(i - 1);
            t.mat("E0," + std::to_string(2 * i) + "-2E" + idx(2 * i - 1, 0), E(0, 2 * i) - Rational(2) * E(2 * i - 1, 0), ti,
                  2 * ti, -E(2 * i - 1, 2 * i));
            t.mat("E0," + std::to_string(2 * i - 1) + "-2E" + idx(2 * i, 0), E(0, 2 * i - 1) - Rational(2) * E(2 * i, 0), -ti,
                  -2 * ti, -E(2 * i, 2 * i - 1));
        }
        for (size_t i = 1; i <= n; ++i)
            for (size_t j = 1; j <= n; ++j) {
                if (i == j) continue;
                IVec ti = e(i - 1), tj = e(j - 1);
                t.mat("E" + idx(2 * i - 1, 2 * j - 1) + "-E" + idx(2 * j, 2 * i), E(2 * i - 1, 2 * j - 1) - E(2 * j, 2 * i),
                      ti - tj, ti - tj);
                if (i < j) {
                    t.mat("E" + idx(2 * i - 1, 2 * j) + "-E" + idx(2 * j - 1, 2 * i), E(2 * i - 1, 2 * j) - E(2 * j - 1, 2 * i),
                          ti + tj, ti + tj);
                    t.mat("E" + idx(2 * i, 2 * j - 1) + "-E" + idx(2 * j, 2 * i - 1), E(2 * i, 2 * j - 1) - E(2 * j, 2 * i - 1),
                          -ti - tj, -ti - tj);
                }
            }
        break;
    }
    case RootFamily::SpinOdd:
    case RootFamily::SpinEven: {
        size_t n = r;
        IVec S(r, 1);
        IVec t1 = e(0);
        if (f == RootFamily::SpinOdd) {
            t.cl(0, 1, t1 + S, t1);
            t.cl(0, 2, -(t1 + S), -t1);
            for (size_t i = 2; i <= n; ++i) {
                IVec ti = e(i - 1);
                t.cl(0, 2 * i - 1, ti, 2 * ti - t1);
                t.cl(0, 2 * i, -ti, t1 - 2 * ti);
            }
        }
        for (size_t i = 2; i <= n; ++i) {
            IVec ti = e(i - 1);
            t.cl(1, 2 * i - 1, t1 + S + ti, ti);
            t.cl(2, 2 * i, -(t1 + S + ti), -ti);
            t.cl(1, 2 * i, t1 + S - ti, t1 - ti);
            t.cl(2, 2 * i - 1, -(t1 + S - ti), ti - t1);
        }
        for (size_t i = 2; i <= n; ++i)
            for (size_t j = i + 1; j <= n; ++j) {
                IVec ti = e(i - 1), tj = e(j - 1);
                t.cl(2 * i - 1, 2 * j - 1, ti + tj, ti + tj - t1);
                t.cl(2 * i, 2 * j, -ti - tj, t1 - ti - tj);
                t.cl(2 * i - 1, 2 * j, ti - tj, ti - tj);
                // listed with coroot t_i - t_j; the pairing forces t_j - t_i
                t.cl(2 * i, 2 * j - 1, tj - ti, tj - ti);
            }
        break;
    }
    case RootFamily::Sp: {
        size_t n = r;
        auto E = [&](size_t a, size_t b) { return t.E(a, b); };
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                t.mat("E" + idx(i + 1, j + 1) + "-E" + idx(j + n + 1, i + n + 1), E(i, j) - E(j + n, i + n), e(i) - e(j),
                      e(i) - e(j));
                if (i < j) {
                    t.mat("E" + idx(i + 1, n + j + 1) + "+E" + idx(j + 1, n + i + 1), E(i, n + j) + E(j, n + i), e(i) + e(j),
                          e(i) + e(j));
                    t.mat("E" + idx(n + i + 1, j + 1) + "+E" + idx(n + j + 1, i + 1), E(n + i, j) + E(n + j, i),
                          -e(i) - e(j), -e(i) - e(j));
                }
            }
        for (size_t i = 0; i < n; ++i) {
            t.mat("E" + idx(i + 1, n + i + 1), E(i, n + i), 2 * e(i), e(i));
            t.mat("E" + idx(n + i + 1, i + 1), E(n + i, i), -2 * e(i), -e(i));
        }
        break;
    }
    case RootFamily::PGSp: {
        size_t n = r;
        // characters t_1..t_n are stored at 0..n-1; T(k) = t_k
        auto T = [&](size_t k) { return e(k - 1); };
        auto sum_except = [&](size_t i) {  // sum over j in 2..n, j != i, of t_{j-1}
            IVec s = t.zero();
            for (size_t j = 2; j <= n; ++j)
                if (j != i) s = s + T(j - 1);
            return s;
        };
        IVec all = t.zero();
        for (size_t j = 1; j < n; ++j) all = all + T(j);
        for (size_t i = 2; i <= n; ++i)
            for (size_t j = 2; j <= n; ++j) {
                if (i == j) continue;
                IVec a = T(i - 1) - T(j - 1);
                t.mat("E" + idx(i, j) + "-E" + idx(j + n, i + n), E1(i, j) - E1(j + n, i + n), a, a);
                if (i < j) {
                    IVec b = T(i - 1) + T(j - 1) - T(n);
                    IVec bv = T(i - 1) + T(j - 1);
                    t.mat("E" + idx(i, n + j) + "+E" + idx(j, n + i), E1(i, n + j) + E1(j, n + i), b, bv);
                    t.mat("E" + idx(n + i, j) + "+E" + idx(n + j, i), E1(n + i, j) + E1(n + j, i), -b, -bv);
                }
            }
        for (size_t i = 2; i <= n; ++i) {
            // listed as E_{i,1} - E_{n+1,i} and E_{1,i} - E_{i+n,1}; the
            // second terms are E_{n+1,n+i} and E_{n+i,n+1}
            IVec c = 2 * T(n) + 2 * T(i - 1) + sum_except(i);
            t.mat("E" + idx(i, 1) + "-E" + idx(n + 1, n + i), E1(i, 1) - E1(n + 1, n + i), T(i - 1), c);
            t.mat("E" + idx(1, i) + "-E" + idx(n + i, n + 1), E1(1, i) - E1(n + i, n + 1), -T(i - 1), -c);
            IVec d = 2 * T(n) + sum_except(i);
            t.mat("E" + idx(1, n + i) + "+E" + idx(i, n + 1), E1(1, n + i) + E1(i, n + 1), T(i - 1) - T(n), -d);
            t.mat("E" + idx(n + 1, i) + "+E" + idx(n + i, 1), E1(n + 1, i) + E1(n + i, 1), T(n) - T(i - 1), d);
            t.mat("E" + idx(i, n + i), E1(i, n + i), 2 * T(i - 1) - T(n), T(i - 1));
            t.mat("E" + idx(n + i, i), E1(n + i, i), T(n) - 2 * T(i - 1), -T(i - 1));
        }
        IVec c = 2 * T(n) + all;
        t.mat("E" + idx(n + 1, 1), E1(n + 1, 1), T(n), c);
        t.mat("E" + idx(1, n + 1), E1(1, n + 1), -T(n), -c);
        break;
    }
    case RootFamily::PGOplus: {
        size_t n = r;
        auto T = [&](size_t k) { return e(k); };  // t_0 .. t_{n-1}
        auto sum_except = [&](size_t i) {
            IVec s = t.zero();
            for (size_t j = 1; j < n; ++j)
                if (j != i) s = s + T(j);
            return s;
        };
        for (size_t i = 1; i < n; ++i)
            for (size_t j = 1; j < n; ++j) {
                if (i == j) continue;
                t.mat("E" + idx(2 * i - 1, 2 * j - 1) + "-E" + idx(2 * j, 2 * i), E1(2 * i - 1, 2 * j - 1) - E1(2 * j, 2 * i),
                      T(i) - T(j), T(i) - T(j));
                if (i < j) {
                    t.mat("E" + idx(2 * i - 1, 2 * j) + "-E" + idx(2 * j - 1, 2 * i), E1(2 * i - 1, 2 * j) - E1(2 * j - 1, 2 * i),
                          T(0) + T(i) + T(j), T(i) + T(j));
                    t.mat("E" + idx(2 * i, 2 * j - 1) + "-E" + idx(2 * j, 2 * i - 1), E1(2 * i, 2 * j - 1) - E1(2 * j, 2 * i - 1),
                          -T(0) - T(i) - T(j), -T(i) - T(j));
                }
            }
        for (size_t i = 1; i < n; ++i) {
            IVec c = 2 * T(i) - 2 * T(0) + sum_except(i);
            t.mat("E" + idx(2 * i - 1, 2 * n - 1) + "-E" + idx(2 * n, 2 * i), E1(2 * i - 1, 2 * n - 1) - E1(2 * n, 2 * i), T(i), c);
            t.mat("E" + idx(2 * n - 1, 2 * i - 1) + "-E" + idx(2 * i, 2 * n), E1(2 * n - 1, 2 * i - 1) - E1(2 * i, 2 * n), -T(i),
                  -c);
            IVec d = 2 * T(0) - sum_except(i);
            t.mat("E" + idx(2 * i - 1, 2 * n) + "-E" + idx(2 * n - 1, 2 * i), E1(2 * i - 1, 2 * n) - E1(2 * n - 1, 2 * i),
                  T(0) + T(i), d);
            t.mat("E" + idx(2 * i, 2 * n - 1) + "-E" + idx(2 * n, 2 * i - 1), E1(2 * i, 2 * n - 1) - E1(2 * n, 2 * i - 1),
                  -T(0) - T(i), -d);
        }
        break;
    }
    }
    return std::move(t.out);
}

// Simple systems as stated for each family.
inline std::vector<IVec> stated_simple_roots(RootFamily f, size_t N) {
    require_root_case(f, N);
    size_t r = torus_rank(f, N);
    auto e = [r](size_t k) { return unit_ivec(r, k); };
    std::vector<IVec> s;
    switch (f) {
    case RootFamily::GL:
        for (size_t i = 0; i + 1 < N; ++i) s.push_back(e(i) - e(i + 1));
        break;
    case RootFamily::SL: {
        auto bar = [&](size_t i) { return i + 1 < N ? e(i) : IVec(r, -1); };
        for (size_t i = 0; i + 1 < N; ++i) s.push_back(bar(i) - bar(i + 1));
        break;
    }
    case RootFamily::PGL:
        for (size_t i = 0; i < r; ++i) s.push_back(e(i));
        break;
    case RootFamily::SO:
        for (size_t i = 0; i + 1 < r; ++i) s.push_back(e(i) - e(i + 1));
        s.push_back(e(r - 1));
        break;
    case RootFamily::SpinOdd: {  // {2t1 + t3 + ... + tn, t2 - t3, ..., t_{n-1} - t_n, t_n}
        IVec a = 2 * e(0);
        for (size_t i = 2; i < r; ++i) a = a + e(i);
        s.push_back(a);
        if (r >= 2) {
            for (size_t i = 1; i + 1 < r; ++i) s.push_back(e(i) - e(i + 1));
            s.push_back(e(r - 1));
        }
        break;
    }
    case RootFamily::Sp:
        for (size_t i = 0; i + 1 < r; ++i) s.push_back(e(i) - e(i + 1));
        s.push_back(2 * e(r - 1));
        break;
    case RootFamily::PGSp:  // t1 - t2, ..., t_{n-1} - t_n, t_n
        for (size_t i = 0; i + 1 < r; ++i) s.push_back(e(i) - e(i + 1));
        s.push_back(e(r - 1));
        break;
    case RootFamily::PGOplus: {  // {t0 + t_{n-1}, t1 - t2, ..., t_{n-2} - t_{n-1}, t_{n-1}}
        s.push_back(e(0) + e(r - 1));
        for (size_t i = 1; i + 1 < r; ++i) s.push_back(e(i) - e(i + 1));
        s.push_back(e(r - 1));
        break;
    }
    case RootFamily::SpinEven: {
        if (r == 2) return {2 * e(0), 2 * e(0) + 2 * e(1)};
        IVec a = 2 * e(0);
        for (size_t i = 2; i < r; ++i) a = a + e(i);
        s.push_back(a);
        for (size_t i = 1; i + 1 < r; ++i) s.push_back(e(i) - e(i + 1));
        s.push_back(e(r - 2) + e(r - 1));
        break;
    }
    }
    return s;
}

// Exponent matrices of the stated isogenies onto the adjoint torus: row i
// gives the pullback of target character i on the source cocharacters.
inline std::optional<IntMatrix> stated_torus_map(RootFamily f, size_t N) {
    require_root_case(f, N);
    size_t n = torus_rank(f, N);
    auto e = [n](size_t k) { return unit_ivec(n, k); };
    IntMatrix c;
    switch (f) {
    case RootFamily::SpinOdd:  // (a1^2, a2 a1^2, ..., an a1^2)
        c.push_back(2 * e(0));
        for (size_t i = 1; i < n; ++i) c.push_back(2 * e(0) + e(i));
        return c;
    case RootFamily::Sp:  // t_i -> t1 - t_{i+1}, t_n -> 2 t1
        for (size_t i = 0; i + 1 < n; ++i) c.push_back(e(0) - e(i + 1));
        c.push_back(2 * e(0));
        return c;
    case RootFamily::SpinEven: {  // (an^2, a1^2 a2 ... a_{n-1}, a2/an, ..., a_{n-1}/an)
        c.push_back(2 * e(n - 1));
        IVec t1 = 2 * e(0);
        for (size_t i = 1; i + 1 < n; ++i) t1 = t1 + e(i);
        c.push_back(t1);
        for (size_t k = 1; k + 1 < n; ++k) c.push_back(e(k) - e(n - 1));
        return c;
    }
    default: return std::nullopt;
    }
}

// Source family, target adjoint family and the target characters as
// functionals on the diagonal of the standard representation.
struct Isogeny {
    RootFamily source, target;
    IntMatrix functionals;  // rows: target characters, columns: positions of V
};

inline std::optional<Isogeny> adjoint_isogeny(RootFamily f, size_t N) {
    require_root_case(f, N);
    size_t r = torus_rank(f, N);
    Isogeny iso;
    iso.source = f;
    auto row = [N]() { return IVec(N, 0); };
    switch (f) {
    case RootFamily::SL:
        iso.target = RootFamily::PGL;
        for (size_t k = 0; k + 1 < N; ++k) {
            auto v = row();
            v[k] = 1;
            v[k + 1] = -1;
            iso.functionals.push_back(v);
        }
        return iso;
    case RootFamily::Sp:  // t_i = d_{i+1} - d_1
        iso.target = RootFamily::PGSp;
        for (size_t i = 1; i <= r; ++i) {
            auto v = row();
            v[i] += 1;
            v[0] -= 1;
            iso.functionals.push_back(v);
        }
        return iso;
    case RootFamily::SpinOdd:  // t_i = d_{2i-1}
        iso.target = RootFamily::SO;
        for (size_t i = 1; i <= r; ++i) {
            auto v = row();
            v[2 * i - 1] = 1;
            iso.functionals.push_back(v);
        }
        return iso;
    case RootFamily::SpinEven: {  // t0 = d_{2n-1} - d_{2n}, t_i = d_{2n} - d_{2i} (1-based)
        iso.target = RootFamily::PGOplus;
        auto v = row();
        v[N - 2] = 1;
        v[N - 1] = -1;
        iso.functionals.push_back(v);
        for (size_t i = 1; i < r; ++i) {
            auto w = row();
            w[N - 1] += 1;
            w[2 * i - 1] -= 1;
            iso.functionals.push_back(w);
        }
        return iso;
    }
    default: return std::nullopt;
    }
}

// F * D with D the source torus on V, one column per cocharacter.
inline IntMatrix derived_torus_map(const Isogeny& iso, size_t N) {
    auto D = vector_weights(make_torus(iso.source, N));
    IntMatrix c;
    for (auto& f : iso.functionals) {
        IVec row(torus_rank(iso.source, N), 0);
        for (size_t p = 0; p < N; ++p)
            if (f[p]) row = row + f[p] * D[p];
        c.push_back(row);
    }
    return c;
}

} // namespace cgs
