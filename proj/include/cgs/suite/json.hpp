#pragma once
#include <json.hpp>

#include "cgs/suite/report.hpp"

namespace cgs {

inline void to_json(nlohmann::json& j, const CaseResult& c) {
    j = nlohmann::json{{"id", c.id},
                       {"paper_ref", c.paper_ref},
                       {"status", to_string(c.status)},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"runtime_ms", c.runtime_ms}};
}

inline void from_json(const nlohmann::json& j, CaseResult& c) {
    j.at("id").get_to(c.id);
    j.at("paper_ref").get_to(c.paper_ref);
    c.status = parse_status(j.at("status").get<std::string>());
    j.at("expected").get_to(c.expected);
    j.at("computed").get_to(c.computed);
    j.at("runtime_ms").get_to(c.runtime_ms);
}

inline void to_json(nlohmann::json& j, const Report& r) { j = nlohmann::json{{"suite", r.suite}, {"cases", r.cases}}; }

inline void from_json(const nlohmann::json& j, Report& r) {
    j.at("suite").get_to(r.suite);
    j.at("cases").get_to(r.cases);
}

} // namespace cgs
