#include "dsrpm/report.hpp"

#include <cstdio>

namespace dsrpm {

void SuiteReport::merge(const SuiteReport& other) {
    cases += other.cases;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [key, value] : other.stats.items()) {
        if (stats.contains(key) && stats[key].is_number_integer() && value.is_number_integer())
            stats[key] = stats[key].get<std::int64_t>() + value.get<std::int64_t>();
        else if (!stats.contains(key))
            stats[key] = value;
    }
    seconds += other.seconds;
}

Json SuiteReport::to_json(bool with_timing) const {
    Json j;
    j["suite"] = suite;
    j["parameters"] = parameters;
    j["cases"] = cases;
    j["passed"] = passed();
    Json vs = Json::array();
    for (const auto& v : violations) vs.push_back({{"predicate", v.predicate}, {"witness", v.witness}, {"detail", v.detail}});
    j["violations"] = vs;
    j["stats"] = stats;
    if (with_timing) j["seconds"] = seconds;
    return j;
}

std::string format_value(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    return buf;
}

}  // namespace dsrpm
