#include "insider/poisson/market.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace insider {

namespace {

void check_sorted(const std::vector<double>& ts, double horizon) {
    double prev = 0.0;
    for (double t : ts) {
        if (!(t > prev) || t > horizon)
            throw std::domain_error("JumpPath: jump times must be strictly increasing in (0, horizon]");
        prev = t;
    }
}

int count_upto(const std::vector<double>& ts, double t) {
    return int(std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
}

std::vector<double> parse_times(const std::string& field) {
    std::vector<double> out;
    std::stringstream ss(field);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

}  // namespace

JumpPath::JumpPath(std::vector<double> jumps1, std::vector<double> jumps2, double horizon)
    : jumps1_(std::move(jumps1)), jumps2_(std::move(jumps2)), horizon_(horizon) {
    if (!(horizon_ > 0.0)) throw std::domain_error("JumpPath: horizon must be > 0");
    check_sorted(jumps1_, horizon_);
    check_sorted(jumps2_, horizon_);
}

int JumpPath::count1(double t) const {
    if (t < 0.0 || t > horizon_) throw std::domain_error("JumpPath: t outside [0, horizon]");
    return count_upto(jumps1_, t);
}

int JumpPath::count2(double t) const {
    if (t < 0.0 || t > horizon_) throw std::domain_error("JumpPath: t outside [0, horizon]");
    return count_upto(jumps2_, t);
}

MarketState JumpPath::state(double t) const {
    const int n1 = count1(t);
    const int n2 = count2(t);
    return {n1, n2, n1 - n2, std::exp(double(n1 - n2))};
}

std::vector<std::pair<double, bool>> JumpPath::merged_jumps() const {
    std::vector<std::pair<double, bool>> out;
    out.reserve(jumps1_.size() + jumps2_.size());
    for (double t : jumps1_) out.emplace_back(t, true);
    for (double t : jumps2_) out.emplace_back(t, false);
    std::sort(out.begin(), out.end());
    return out;
}

std::string JumpPath::serialize() const {
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    std::string line = fmt(horizon_) + ";";
    for (std::size_t i = 0; i < jumps1_.size(); ++i) line += (i ? "," : " ") + fmt(jumps1_[i]);
    line += ";";
    for (std::size_t i = 0; i < jumps2_.size(); ++i) line += (i ? "," : " ") + fmt(jumps2_[i]);
    return line;
}

JumpPath JumpPath::parse(const std::string& line) {
    std::stringstream ss(line);
    std::string horizon_field, f1, f2;
    if (!std::getline(ss, horizon_field, ';')) throw std::domain_error("JumpPath: bad line");
    std::getline(ss, f1, ';');
    std::getline(ss, f2, ';');
    return JumpPath(parse_times(f1), parse_times(f2), std::stod(horizon_field));
}

JumpPath simulate_path(const MarketParams& params, SeededStream& stream) {
    if (!(params.horizon > 0.0)) throw std::domain_error("simulate_path: horizon must be > 0");
    auto j1 = stream.poisson_jump_times(params.intensity1, params.horizon);
    auto j2 = stream.poisson_jump_times(params.intensity2, params.horizon);
    return JumpPath(std::move(j1), std::move(j2), params.horizon);
}

}  // namespace insider
