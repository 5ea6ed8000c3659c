#pragma once
#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgs {

enum class CaseStatus { Pass, Fail, Skipped };

inline const char* to_string(CaseStatus s) {
    switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
    }
    return "?";
}

inline CaseStatus parse_status(const std::string& s) {
    if (s == "pass") return CaseStatus::Pass;
    if (s == "fail") return CaseStatus::Fail;
    if (s == "skipped") return CaseStatus::Skipped;
    throw std::invalid_argument("unknown case status: " + s);
}

struct CaseResult {
    std::string id;
    std::string paper_ref;
    CaseStatus status = CaseStatus::Skipped;
    std::string expected;
    std::string computed;
    long runtime_ms = 0;

    friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

struct Report {
    std::string suite;
    std::vector<CaseResult> cases;

    void sort() {
        std::sort(cases.begin(), cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
    }
    size_t count(CaseStatus s) const {
        return size_t(std::count_if(cases.begin(), cases.end(), [s](const CaseResult& c) { return c.status == s; }));
    }
    bool passed() const { return count(CaseStatus::Fail) == 0; }

    friend bool operator==(const Report&, const Report&) = default;
};

} // namespace cgs
