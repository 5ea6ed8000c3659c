// cgs: verification suites, root data, Lie algebras, Clifford tables and
// finite group orders from the command line.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "cgs/clifford.hpp"
#include "cgs/exactring.hpp"
#include "cgs/groups.hpp"
#include "cgs/lie.hpp"
#include "cgs/rootdata.hpp"
#include "cgs/suite/acceptance.hpp"
#include "cgs/suite/formspec.hpp"
#include "cgs/suite/json.hpp"

namespace {

using namespace cgs;
using nlohmann::json;

constexpr int kUsage = 2;

template <class F>
int with_field(const std::string& k, F&& f) {
    if (k == "q") return f.template operator()<Rational>();
    if (k == "f2") return f.template operator()<F2>();
    if (k == "f3") return f.template operator()<F3>();
    if (k == "f5") return f.template operator()<F5>();
    throw UsageError("unknown field '" + k + "' (use q, f2, f3 or f5)");
}

template <class F>
int with_finite_field(const std::string& k, F&& f) {
    if (k == "f2") return f.template operator()<F2>();
    if (k == "f3") return f.template operator()<F3>();
    if (k == "f5") return f.template operator()<F5>();
    throw UsageError("enumeration needs a finite field (f2, f3 or f5), got '" + k + "'");
}

Family group_family(const std::string& name) {
    auto f = parse_family(name);
    if (!f) throw UsageError("unknown family '" + name + "'");
    return *f;
}

void require_n(size_t n, size_t max_n, const std::string& what) {
    if (n == 0) throw UsageError(what + ": n must be positive");
    if (n > max_n)
        throw UsageError(what + ": n = " + std::to_string(n) + " is above the budget " + std::to_string(max_n) +
                         " (raise it with --max-n)");
}

// ---- verify -------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    std::vector<std::string> fields;
    size_t max_n = 5;
    bool json = false, no_timing = false;
    unsigned threads = 0;
};

int run_verify(const VerifyArgs& a) {
    std::vector<Criterion> chosen;
    for (auto& c : acceptance_criteria())
        if (a.suite == "all" || a.suite == std::to_string(c.number)) chosen.push_back(c);
    if (chosen.empty()) throw UsageError("unknown suite '" + a.suite + "' (use all or 1..10)");
    SuiteOptions opt;
    opt.fields.insert(a.fields.begin(), a.fields.end());
    opt.max_n = a.max_n;
    opt.timing = !a.no_timing;
    opt.threads = a.threads;
    auto report = run_suite(a.suite == "all" ? "acceptance" : "acceptance-" + a.suite, chosen, opt);
    if (a.json) {
        std::cout << json(report).dump(2) << "\n";
    } else {
        for (auto& r : report.cases) {
            std::cout << to_string(r.status) << "  " << r.id << "  " << r.computed;
            if (r.status == CaseStatus::Fail) std::cout << "  (expected " << r.expected << ")";
            std::cout << "\n";
        }
        for (auto& s : summarize(report, chosen)) std::cout << summary_line(s) << "\n";
    }
    return report.passed() ? 0 : 1;
}

// ---- rootdatum ------------------------------------------------------------------

json ivec_json(const IVec& v) { return json(std::vector<long>(v.begin(), v.end())); }

int run_rootdatum(const std::string& family, size_t N, bool as_json, bool fixture) {
    auto f = parse_root_family(family);
    if (!f) throw UsageError("unknown family '" + family + "' (gl, sl, pgl, so, spin, sp, pgsp, pgo+, spin-even)");
    if (auto p = root_case_problem(*f, N); !p.empty()) throw UsageError(family + " " + std::to_string(N) + ": " + p);
    auto b = build_datum(*f, N);
    if (fixture) {
        std::cout << fixture_text(b);
        return 0;
    }
    auto& d = b.datum;
    auto dyn = cartan_and_type(d);
    auto fl = adjoint_sc_flags(d);
    std::optional<FiniteDiagGroup> z;
    if (fl.semisimple) z = center_from_datum(d);
    if (as_json) {
        json j{{"family", info(*f).name},
               {"n", N},
               {"rank", d.rank},
               {"type", dyn.type},
               {"semisimple", fl.semisimple},
               {"adjoint", fl.adjoint},
               {"simply_connected", fl.simply_connected},
               {"center", z ? json(z->ascii()) : json(nullptr)},
               {"characters", d.char_labels},
               {"cocharacters", d.cochar_labels}};
        j["simple_roots"] = json::array();
        for (auto& s : dyn.simple) j["simple_roots"].push_back(ivec_json(s));
        j["roots"] = json::array();
        for (auto& e : b.table) j["roots"].push_back({{"label", e.label}, {"root", ivec_json(e.root)}, {"coroot", ivec_json(e.coroot)}});
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    auto yes = [](bool x) { return x ? "yes" : "no"; };
    std::cout << info(*f).name << " " << N << "\n";
    std::cout << "type              " << (dyn.type.empty() ? "torus" : dyn.type) << "\n";
    std::cout << "rank              " << d.rank << "\n";
    std::cout << "semisimple        " << yes(fl.semisimple) << "\n";
    if (fl.semisimple) {
        std::cout << "adjoint           " << yes(fl.adjoint) << "\n";
        std::cout << "simply connected  " << yes(fl.simply_connected) << "\n";
        std::cout << "center            " << z->name() << "\n";
    }
    std::cout << "characters        ";
    for (auto& l : d.char_labels) std::cout << l << " ";
    std::cout << "\nsimple roots\n";
    for (auto& s : dyn.simple) std::cout << "  " << str(s) << "\n";
    std::cout << "roots | coroots\n";
    for (auto& e : b.table) std::cout << "  " << str(e.root) << " | " << str(e.coroot) << "   " << e.label << "\n";
    return 0;
}

// ---- lie --------------------------------------------------------------------------

template <Field K>
int run_lie(Family f, size_t n) {
    auto L = lie_algebra<K>(GroupId{f, n});
    std::cout << "Lie(" << GroupId{f, n}.str() << ") over " << field_tag<K>() << "\n";
    std::cout << "dim " << L.dim() << "\n";
    if (L.modulo_scalars) std::cout << "basis (representatives modulo scalars)\n";
    else std::cout << "basis\n";
    for (auto& x : L.matrices) std::cout << "  " << x.str() << "\n";
    for (auto& x : L.clifford) std::cout << "  " << x.str() << "\n";
    return 0;
}

// ---- clifford table ---------------------------------------------------------------

std::string basis_name(uint32_t m) {
    if (!m) return "1";
    std::string s = "e";
    bool first = true;
    for (uint32_t i = 0; i < 32; ++i)
        if (m >> i & 1u) {
            s += (first ? "" : ".") + std::to_string(i);
            first = false;
        }
    return s;
}

template <Field K>
int run_clifford_table(const std::string& spec, size_t max_rank) {
    auto q = parse_form_spec<K>(spec);
    if (q.rank() > max_rank)
        throw UsageError("form rank " + std::to_string(q.rank()) + " is above the budget " + std::to_string(max_rank));
    auto alg = clifford_algebra(q);
    using E = CliffordElement<K>;
    std::cout << "form " << spec << " over " << field_tag<K>() << ", coefficients " << q.coeffs.str() << "\n";
    std::cout << "dimension " << alg->dimension() << "\n";
    for (uint32_t u = 0; u < alg->dimension(); ++u)
        for (uint32_t v = 0; v < alg->dimension(); ++v)
            std::cout << basis_name(u) << " * " << basis_name(v) << " = " << (E::basis(alg, u) * E::basis(alg, v)).str()
                      << "\n";
    return 0;
}

// ---- enumerate ----------------------------------------------------------------------

template <FiniteRing K>
int run_enumerate(Family f, size_t n, size_t budget) {
    EnumerationOptions opt;
    opt.budget = budget;
    auto e = enumerate(ClassicalGroup<K>(GroupId{f, n}), opt);
    std::cout << GroupId{f, n}.str() << " over " << field_tag<K>() << "\n";
    std::cout << "order " << e.size() << "\n";
    std::cout << "search nodes " << e.nodes << "\n";
    if (is_clifford_family(f)) std::cout << "closed under sampled products " << (e.closed ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact split classical groups: verification suites, root data, Lie algebras, Clifford algebras"};
    app.require_subcommand(1);
    std::function<int()> action;

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the acceptance suites and report");
    verify->add_option("suite", va.suite, "all, or a criterion number 1..10")->required();
    verify->add_option("--field", va.fields, "restrict to fields (repeatable)")
        ->check(CLI::IsMember({"q", "f2", "f3", "f5"}));
    verify->add_option("--max-n", va.max_n, "skip cases with n above this")->capture_default_str();
    verify->add_option("--threads", va.threads, "worker threads (0: hardware concurrency)");
    verify->add_flag("--json", va.json, "print the JSON report");
    verify->add_flag("--no-timing", va.no_timing, "report runtime_ms as 0, for byte-identical reports");
    verify->callback([&] { action = [&] { return run_verify(va); }; });

    std::string family, field = "q", spec;
    size_t n = 0, max_n = 9, budget = EnumerationOptions{}.budget, max_rank = 8;
    bool as_json = false, fixture = false;

    auto* root = app.add_subcommand("rootdatum", "roots, coroots, simple roots, type and center");
    root->add_option("family", family, "gl, sl, pgl, so, spin, sp, pgsp, pgo+, spin-even")->required();
    root->add_option("n", n, "matrix size, or form rank for spin groups")->required();
    root->add_flag("--json", as_json, "machine-readable output");
    root->add_flag("--fixture", fixture, "golden fixture text");
    root->callback([&] { action = [&] { return run_rootdatum(family, n, as_json, fixture); }; });

    auto* lie = app.add_subcommand("lie", "dimension and basis of Lie(G)");
    lie->add_option("family", family, "GL, SL, PGL, O, SO, Oplus, Sp, PGSp, GO, PGO, PGOplus, Spin")->required();
    lie->add_option("n", n, "matrix size, or form rank for Spin")->required();
    lie->add_option("--field", field, "q, f2, f3 or f5")->capture_default_str();
    lie->add_option("--max-n", max_n, "largest n accepted")->capture_default_str();
    lie->callback([&] {
        action = [&] {
            auto f = group_family(family);
            require_n(n, max_n, "lie");
            return with_field(field, [&]<class K>() { return run_lie<K>(f, n); });
        };
    });

    auto* cliff = app.add_subcommand("clifford", "Clifford algebra tools");
    auto* table = cliff->add_subcommand("table", "multiplication table of the basis e_S");
    table->add_option("form-spec", spec, "hyp:m | diag:a1,a2,... | bin:a,b[+bin:c,d...]")->required();
    table->add_option("--field", field, "q, f2, f3 or f5")->capture_default_str();
    table->add_option("--max-rank", max_rank, "largest form rank accepted")->capture_default_str();
    table->callback([&] {
        action = [&] { return with_field(field, [&]<class K>() { return run_clifford_table<K>(spec, max_rank); }); };
    });
    cliff->require_subcommand(1);

    auto* en = app.add_subcommand("enumerate", "order of G(F_p) by exhaustive search");
    en->add_option("family", family, "group family, e.g. O, SO, Oplus, Sp, Spin")->required();
    en->add_option("n", n, "matrix size, or form rank for Clifford families")->required();
    en->add_option("--field", field, "f2, f3 or f5")->required();
    en->add_option("--max-n", max_n, "largest n accepted")->capture_default_str();
    en->add_option("--budget", budget, "search nodes before giving up")->capture_default_str();
    en->callback([&] {
        action = [&] {
            auto f = group_family(family);
            require_n(n, max_n, "enumerate");
            return with_finite_field(field, [&]<class K>() { return run_enumerate<K>(f, n, budget); });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedCase& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DimensionMismatch& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
