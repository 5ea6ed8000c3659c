#pragma once
#include <set>
#include <string>
#include <vector>

#include "cgs/rootdata.hpp"
#include "cgs/suite/runner.hpp"

namespace cgs::suite {

// Matrix (or form) size of the member of family f with index n.
inline size_t matrix_size(RootFamily f, size_t n) {
    switch (info(f).letter) {
    case 'A': return n;
    case 'B': return 2 * n + 1;
    default: return 2 * n;
    }
}

inline std::string root_id(int c, RootFamily f, size_t n) {
    return std::string(c < 10 ? "c0" : "c") + std::to_string(c) + "." + info(f).name + ".n" + std::to_string(n);
}

// Rank-1 and D2 conventions: B1 = C1 = A1, D2 = A1xA1.
inline std::string expected_type(RootFamily f, size_t n) {
    char L = info(f).letter;
    size_t rank = L == 'A' ? n - 1 : n;
    if (rank == 1) return "A1";
    if (L == 'D' && n == 2) return "A1xA1";
    return std::string(1, L) + std::to_string(rank);
}

inline size_t expected_root_count(RootFamily f, size_t n) {
    switch (info(f).letter) {
    case 'A': return n * (n - 1);
    case 'D': return 2 * n * (n - 1);
    default: return 2 * n * n;
    }
}

struct FamilyRange {
    RootFamily family;
    size_t lo, hi;
    std::string group;
};

inline const std::vector<FamilyRange>& root_ranges() {
    static const std::vector<FamilyRange> r{
        {RootFamily::GL, 2, 4, "GL_n"},          {RootFamily::SL, 2, 4, "SL_n"},
        {RootFamily::PGL, 2, 4, "PGL_n"},        {RootFamily::SO, 1, 3, "SO_{2n+1}"},
        {RootFamily::SpinOdd, 1, 3, "Spin_{2n+1}"}, {RootFamily::Sp, 1, 3, "Sp_{2n}"},
        {RootFamily::PGSp, 1, 3, "PGSp_{2n}"},   {RootFamily::PGOplus, 2, 4, "PGO+_{2n}"},
        {RootFamily::SpinEven, 2, 4, "Spin_{2n}"}};
    return r;
}

inline Outcome root_data_outcome(RootFamily f, size_t n) {
    auto b = build_datum(f, matrix_size(f, n));
    std::set<IVec> from_weights, listed;
    for (auto& w : b.weights)
        if (std::any_of(w.weight.begin(), w.weight.end(), [](long x) { return x != 0; })) from_weights.insert(w.weight);
    for (auto& e : b.table) listed.insert(e.root);
    size_t coroots_agree = 0;
    for (size_t k = 0; k < b.table.size(); ++k) coroots_agree += b.searched_coroots[k] == b.table[k].coroot;
    size_t want = expected_root_count(f, n);
    bool ok = from_weights == listed && listed.size() == want && coroots_agree == b.table.size();
    return {ok, std::to_string(want) + " roots as listed, every listed coroot found by search",
            std::to_string(from_weights.size()) + " weights" + (from_weights == listed ? " = " : " != ") + "listed " +
                std::to_string(listed.size()) + ", " + std::to_string(coroots_agree) + "/" +
                std::to_string(b.table.size()) + " coroots found by search"};
}

inline std::vector<CaseSpec> root_data_cases() {
    std::vector<CaseSpec> out;
    for (auto& r : root_ranges())
        for (size_t n = r.lo; n <= r.hi; ++n)
            out.push_back({root_id(3, r.family, n), "roots and coroots of " + r.group, "z", n, [f = r.family, n] { return root_data_outcome(f, n); }});
    return out;
}

inline std::string flags_text(const std::string& type, const Flags& fl) {
    return "type " + type + ", semisimple " + show(fl.semisimple) + ", adjoint " + show(fl.adjoint) +
           ", simply connected " + show(fl.simply_connected);
}

inline Flags expected_flags(RootFamily f) {
    switch (f) {
    case RootFamily::GL: return {false, false, false, ""};
    case RootFamily::SL:
    case RootFamily::SpinOdd:
    case RootFamily::Sp:
    case RootFamily::SpinEven: return {true, false, true, ""};
    default: return {true, true, false, ""};
    }
}

inline std::vector<CaseSpec> dynkin_cases() {
    std::vector<CaseSpec> out;
    for (auto& r : root_ranges())
        for (size_t n = r.lo; n <= r.hi; ++n)
            out.push_back({root_id(4, r.family, n), "type and isogeny class of " + r.group, "z", n,
                           [f = r.family, n] {
                               auto b = build_datum(f, matrix_size(f, n));
                               auto fl = adjoint_sc_flags(b.datum);
                               auto want = flags_text(expected_type(f, n), expected_flags(f));
                               auto got = flags_text(cartan_and_type(b.datum).type, fl);
                               return Outcome{want == got, want, got};
                           }});
    return out;
}

inline std::string expected_center(RootFamily f, size_t n) {
    switch (f) {
    case RootFamily::SL: return "mu" + std::to_string(n);
    case RootFamily::SpinOdd:
    case RootFamily::Sp: return "mu2";
    case RootFamily::SpinEven: return n % 2 ? "mu4" : "mu2xmu2";
    default: return "trivial";
    }
}

// Center from the datum (characters modulo roots) and from the kernel of
// the torus map to the adjoint group; the stated map is a third route.
inline Outcome center_outcome(RootFamily f, size_t n) {
    size_t N = matrix_size(f, n);
    auto b = build_datum(f, N);
    std::string want = expected_center(f, n);
    std::string got = "datum " + center_from_datum(b.datum).ascii();
    bool ok = center_from_datum(b.datum).ascii() == want;
    if (auto iso = adjoint_isogeny(f, N)) {
        auto z = center_from_torus_map(derived_torus_map(*iso, N)).ascii();
        got += ", torus map " + z;
        ok = ok && z == want;
    }
    if (auto st = stated_torus_map(f, N)) {
        auto z = center_from_torus_map(*st).ascii();
        got += ", stated torus map " + z;
        ok = ok && z == want;
    }
    return {ok, want + " by every route", got};
}

inline std::vector<CaseSpec> center_cases() {
    std::vector<CaseSpec> out;
    auto add = [&](RootFamily f, size_t lo, size_t hi, const std::string& ref) {
        for (size_t n = lo; n <= hi; ++n)
            out.push_back({root_id(5, f, n), ref, "z", n, [f, n] { return center_outcome(f, n); }});
    };
    add(RootFamily::SL, 2, 5, "center of SL_n is mu_n");
    add(RootFamily::SpinOdd, 1, 3, "center of Spin_{2n+1} is mu_2");
    add(RootFamily::Sp, 1, 3, "center of Sp_{2n} is mu_2");
    add(RootFamily::SpinEven, 2, 4, "center of Spin_{2n}");
    add(RootFamily::PGL, 2, 4, "adjoint groups have trivial center");
    add(RootFamily::SO, 1, 3, "adjoint groups have trivial center");
    add(RootFamily::PGSp, 1, 3, "adjoint groups have trivial center");
    add(RootFamily::PGOplus, 2, 4, "adjoint groups have trivial center");
    return out;
}

} // namespace cgs::suite
