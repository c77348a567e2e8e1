#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace dsrpm {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchemaVersion = "1.0";

/// One failed predicate, with a graph6 witness that replays it.
struct Violation {
    std::string predicate;
    std::string witness;  ///< graph6
    Json detail = Json::object();
};

struct SuiteReport {
    std::string suite;
    Json parameters = Json::object();
    std::uint64_t cases = 0;
    std::vector<Violation> violations;
    Json stats = Json::object();
    double seconds = 0.0;

    bool passed() const { return violations.empty(); }

    /// Folds another chunk's counts, violations and stats-counters into this one.
    void merge(const SuiteReport& other);

    /// Timing is left out when `with_timing` is false, so seeded runs compare equal.
    Json to_json(bool with_timing = true) const;
};

/// Renders 12 significant digits.
std::string format_value(long double v);

}  // namespace dsrpm
