#pragma once
#include <algorithm>
#include <sstream>
#include <string>

#include "cgs/roots/build.hpp"

namespace cgs {

// Golden fixture text: one key per line, integer vectors space separated,
// roots sorted, each root followed by its coroot after a bar.
inline std::string fixture_text(const BuiltDatum& b) {
    auto& d = b.datum;
    auto dyn = cartan_and_type(d);
    auto fl = adjoint_sc_flags(d);
    auto vec = [](const IVec& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    std::ostringstream o;
    o << "family " << info(b.family).name << "\n";
    o << "n " << b.N << "\n";
    o << "rank " << d.rank << "\n";
    o << "type " << dyn.type << "\n";
    o << "semisimple " << fl.semisimple << "\n";
    o << "adjoint " << fl.adjoint << "\n";
    o << "simply_connected " << fl.simply_connected << "\n";
    o << "center " << (fl.semisimple ? center_from_datum(d).ascii() : "none") << "\n";
    auto simple = dyn.simple;
    std::sort(simple.begin(), simple.end());
    for (auto& s : simple) o << "simple " << vec(s) << "\n";
    std::vector<std::pair<IVec, IVec>> rc;
    for (size_t k = 0; k < d.roots.size(); ++k) rc.emplace_back(d.roots[k], d.coroots[k]);
    std::sort(rc.begin(), rc.end());
    for (auto& [a, av] : rc) o << "root " << vec(a) << " | " << vec(av) << "\n";
    return o.str();
}

} // namespace cgs
