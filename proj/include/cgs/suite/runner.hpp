#pragma once
#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cgs/suite/report.hpp"

namespace cgs {

struct SuiteOptions {
    std::set<std::string> fields;  // empty: every field
    size_t max_n = 5;
    bool timing = true;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct Outcome {
    bool pass = false;
    std::string expected, computed;
};

// One checkable claim. `field` is "q", "f2", "f3", "f5" or "z" (integer data,
// never filtered); `n` is the size parameter compared against max_n.
struct CaseSpec {
    std::string id;
    std::string paper_ref;
    std::string field;
    size_t n = 0;
    std::function<Outcome()> run;
};

struct Criterion {
    int number;
    std::string title;
    std::function<std::vector<CaseSpec>()> cases;

    std::string prefix() const { return (number < 10 ? "c0" : "c") + std::to_string(number) + "."; }
};

// ---- outcome helpers --------------------------------------------------------

inline std::string show(const std::string& s) { return s; }
inline std::string show(const char* s) { return s; }
inline std::string show(bool b) { return b ? "true" : "false"; }
template <class T>
    requires std::is_arithmetic_v<T>
std::string show(const T& x) {
    return std::to_string(x);
}
template <class T>
    requires requires(const T& x) { x.str(); }
std::string show(const T& x) {
    return x.str();
}

template <class T>
Outcome expect_equal(const T& expected, const T& computed) {
    return {expected == computed, show(expected), show(computed)};
}

// Counts how many of `total` samples satisfied a property.
inline Outcome expect_all(const std::string& what, size_t good, size_t total) {
    return {good == total && total > 0, std::to_string(total) + "/" + std::to_string(total) + " " + what,
            std::to_string(good) + "/" + std::to_string(total) + " " + what};
}

// Stable per-case seed, independent of scheduling.
inline std::mt19937_64 case_rng(const std::string& id) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : id) h = (h ^ c) * 1099511628211ull;
    return std::mt19937_64(h);
}

// ---- running ----------------------------------------------------------------

inline bool selected(const CaseSpec& c, const SuiteOptions& opt, std::string& why) {
    if (!opt.fields.empty() && c.field != "z" && !opt.fields.count(c.field)) {
        why = "field " + c.field + " not selected";
        return false;
    }
    if (c.n > opt.max_n) {
        why = "n = " + std::to_string(c.n) + " above --max-n " + std::to_string(opt.max_n);
        return false;
    }
    return true;
}

inline CaseResult run_case(const CaseSpec& c, const SuiteOptions& opt) {
    CaseResult r{c.id, c.paper_ref, CaseStatus::Skipped, "", "", 0};
    std::string why;
    if (!selected(c, opt, why)) {
        r.computed = why;
        return r;
    }
    auto start = std::chrono::steady_clock::now();
    try {
        auto o = c.run();
        r.status = o.pass ? CaseStatus::Pass : CaseStatus::Fail;
        r.expected = o.expected;
        r.computed = o.computed;
    } catch (const std::exception& e) {
        r.status = CaseStatus::Fail;
        r.computed = std::string("error: ") + e.what();
    }
    if (opt.timing)
        r.runtime_ms = long(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

// Cases go to a pool of workers pulling from a shared index; the report is
// sorted by id afterwards, so scheduling never shows in the output.
inline Report run_suite(const std::string& name, const std::vector<Criterion>& criteria, const SuiteOptions& opt) {
    std::vector<CaseSpec> specs;
    for (auto& c : criteria)
        for (auto& s : c.cases()) specs.push_back(std::move(s));
    std::set<std::string> ids;
    for (auto& s : specs)
        if (!ids.insert(s.id).second) throw std::logic_error("duplicate case id " + s.id);

    Report rep;
    rep.suite = name;
    rep.cases.resize(specs.size());
    std::atomic<size_t> next{0};
    unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = unsigned(std::min<size_t>(workers, std::max<size_t>(specs.size(), 1)));
    auto work = [&] {
        for (size_t k; (k = next++) < specs.size();) rep.cases[k] = run_case(specs[k], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    rep.sort();
    return rep;
}

struct CriterionSummary {
    int number;
    std::string title;
    size_t pass = 0, fail = 0, skipped = 0;
    std::string verdict() const { return fail ? "FAIL" : pass ? "PASS" : "SKIPPED"; }
};

inline std::vector<CriterionSummary> summarize(const Report& rep, const std::vector<Criterion>& criteria) {
    std::vector<CriterionSummary> out;
    for (auto& c : criteria) {
        CriterionSummary s{c.number, c.title};
        for (auto& r : rep.cases) {
            if (r.id.rfind(c.prefix(), 0) != 0) continue;
            if (r.status == CaseStatus::Pass) ++s.pass;
            if (r.status == CaseStatus::Fail) ++s.fail;
            if (r.status == CaseStatus::Skipped) ++s.skipped;
        }
        out.push_back(s);
    }
    return out;
}

inline std::string summary_line(const CriterionSummary& s) {
    std::ostringstream o;
    o << "criterion " << s.number << " " << s.verdict() << "  " << s.title << "  (" << s.pass << " pass, " << s.fail
      << " fail, " << s.skipped << " skipped)";
    return o.str();
}

} // namespace cgs
