#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace insider {

inline constexpr const char* kVersion = "0.1.0";

// One verdict line. `rule` records how pass was decided:
//   abs : |estimate - target| <= tolerance
//   le  : estimate <= target + tolerance
//   ge  : estimate >= target - tolerance
//   flag: estimate is a boolean outcome (1 pass / 0 fail)
struct CheckRow {
    std::string name;
    double estimate = 0.0;
    double se = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    std::string rule = "abs";
    bool pass = false;
};

CheckRow check_abs(const std::string& name, double estimate, double se, double target,
                   double tolerance);
CheckRow check_le(const std::string& name, double estimate, double se, double target,
                  double tolerance);
CheckRow check_ge(const std::string& name, double estimate, double se, double target,
                  double tolerance);
CheckRow check_flag(const std::string& name, bool ok);

struct ExperimentReport {
    std::string experiment;
    std::uint64_t seed = 0;
    nlohmann::json config;  // effective config echoed back
    std::vector<CheckRow> checks;
    std::string version = kVersion;

    bool all_pass() const;
};

// Canonical serialization: given identical inputs the bytes are identical
// (keys sorted, shortest round-trip doubles). Wall-clock data never enters.
std::string report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const std::string& text);

// Long format: name,estimate,se,target,tolerance,pass
std::string report_to_csv(const ExperimentReport& report);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace insider
