#include "insider/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace insider {

CheckRow check_abs(const std::string& name, double estimate, double se, double target,
                   double tolerance) {
    return {name, estimate, se, target, tolerance, "abs",
            std::abs(estimate - target) <= tolerance};
}

CheckRow check_le(const std::string& name, double estimate, double se, double target,
                  double tolerance) {
    return {name, estimate, se, target, tolerance, "le", estimate <= target + tolerance};
}

CheckRow check_ge(const std::string& name, double estimate, double se, double target,
                  double tolerance) {
    return {name, estimate, se, target, tolerance, "ge", estimate >= target - tolerance};
}

CheckRow check_flag(const std::string& name, bool ok) {
    return {name, ok ? 1.0 : 0.0, 0.0, 1.0, 0.0, "flag", ok};
}

bool ExperimentReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["experiment"] = report.experiment;
    j["seed"] = report.seed;
    j["version"] = report.version;
    j["config"] = report.config;
    j["pass"] = report.all_pass();
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"estimate", c.estimate},
                          {"se", c.se},
                          {"target", c.target},
                          {"tolerance", c.tolerance},
                          {"rule", c.rule},
                          {"pass", c.pass}});
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExperimentReport r;
    r.experiment = j.at("experiment").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.version = j.at("version").get<std::string>();
    r.config = j.at("config");
    for (const auto& c : j.at("checks")) {
        CheckRow row;
        row.name = c.at("name").get<std::string>();
        row.estimate = c.at("estimate").get<double>();
        row.se = c.at("se").get<double>();
        row.target = c.at("target").get<double>();
        row.tolerance = c.at("tolerance").get<double>();
        row.rule = c.at("rule").get<std::string>();
        row.pass = c.at("pass").get<bool>();
        r.checks.push_back(row);
    }
    return r;
}

namespace {
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

std::string report_to_csv(const ExperimentReport& report) {
    std::string out = "name,estimate,se,target,tolerance,pass\n";
    for (const auto& c : report.checks) {
        out += c.name + "," + fmt_double(c.estimate) + "," + fmt_double(c.se) + "," +
               fmt_double(c.target) + "," + fmt_double(c.tolerance) + "," +
               (c.pass ? "true" : "false") + "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace insider
