#include "insider/contg/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "insider/kernels/parallel.hpp"

namespace insider {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double PiecewiseControl::at(double t) const {
    const auto it = std::upper_bound(knots.begin(), knots.end(), t);
    std::size_t idx = std::size_t(it - knots.begin());
    if (idx == 0) return values.front();
    if (idx > values.size()) idx = values.size();
    return values[idx - 1];
}

void PiecewiseControl::validate(double horizon) const {
    if (knots.size() != values.size() + 1 || values.empty())
        throw std::domain_error("PiecewiseControl: knots must outnumber values by one");
    if (knots.front() != 0.0 || std::abs(knots.back() - horizon) > 1e-12)
        throw std::domain_error("PiecewiseControl: must span [0, horizon]");
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        if (!(knots[i] < knots[i + 1])) throw std::domain_error("PiecewiseControl: knots not increasing");
}

PiecewiseControl random_feasible_control(const ThetaMarket& market, SeededStream& stream,
                                         int n_pieces) {
    if (n_pieces < 1) throw std::domain_error("random_feasible_control: n_pieces >= 1");
    PiecewiseControl c;
    c.knots.push_back(0.0);
    std::vector<double> cuts;
    for (int i = 0; i + 1 < n_pieces; ++i) cuts.push_back(market.horizon * stream.uniform());
    std::sort(cuts.begin(), cuts.end());
    for (double t : cuts)
        if (c.knots.back() < t) c.knots.push_back(t);
    c.knots.push_back(market.horizon);
    for (std::size_t i = 0; i + 1 < c.knots.size(); ++i)
        c.values.push_back(stream.uniform() / market.theta);  // alpha1 in [0, 1/theta]
    c.validate(market.horizon);
    return c;
}

double theta_log_density(const ThetaMarket& market, const PiecewiseControl& control,
                         const std::vector<double>& jumps1, const std::vector<double>& jumps2) {
    control.validate(market.horizon);
    const double th = market.theta;
    if (!(th > 0.0) || !(th < 1.0)) throw std::domain_error("theta must lie in (0,1)");
    auto alpha2 = [&](double a1) { return (1.0 - th * a1) / (1.0 - th); };
    for (double a1 : control.values)
        if (a1 < 0.0 || a1 > 1.0 / th + 1e-12)
            throw std::domain_error("theta_log_density: infeasible control");
    double lw = 0.0;
    for (double t : jumps1) {
        const double a1 = control.at(t);
        lw += a1 > 0.0 ? std::log(a1) : kNegInf;
    }
    for (double t : jumps2) {
        const double a2 = alpha2(control.at(t));
        lw += a2 > 0.0 ? std::log(a2) : kNegInf;
    }
    // Compensator integral of (alpha1 + alpha2 - 2) piece by piece.
    for (std::size_t i = 0; i < control.values.size(); ++i) {
        const double len = control.knots[i + 1] - control.knots[i];
        lw -= (control.values[i] + alpha2(control.values[i]) - 2.0) * len;
    }
    return lw;
}

double theta_terminal_price(const ThetaMarket& market, const std::vector<double>& jumps1,
                            const std::vector<double>& jumps2) {
    const double T = market.horizon;
    // int_0^T sigma(s) ds for the linear volatility.
    const double sigma_int = market.sigma0 * T + 0.5 * market.sigma1 * T * T;
    double log_s = -sigma_int;
    for (double t : jumps1) log_s += std::log1p(market.theta * market.sigma(t));
    for (double t : jumps2) log_s += std::log1p((1.0 - market.theta) * market.sigma(t));
    return std::exp(log_s);
}

UiBoundResult ui_bound_check(const ThetaMarket& market,
                             const std::vector<PiecewiseControl>& controls,
                             std::size_t paths_per_control, std::uint64_t seed, int threads) {
    if (controls.empty()) throw std::domain_error("ui_bound_check: no controls");
    const double T = market.horizon;
    const double log_th = std::log(market.theta);
    const double log_1mth = std::log(1.0 - market.theta);
    const std::size_t total = controls.size() * paths_per_control;
    std::vector<double> log_ratio(total);
    parallel_for_blocks(total, 1024, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t which = i / paths_per_control;
            SeededStream stream(seed, i);
            const auto j1 = stream.poisson_jump_times(1.0, T);
            const auto j2 = stream.poisson_jump_times(1.0, T);
            const double lz = theta_log_density(market, controls[which], j1, j2);
            const double log_bound =
                2.0 * T - double(j1.size()) * log_th - double(j2.size()) * log_1mth;
            log_ratio[i] = lz == kNegInf ? kNegInf : lz - log_bound;
        }
    });
    UiBoundResult out;
    out.n_paths = total;
    out.max_log_ratio = kNegInf;
    out.violations = 0;
    for (double r : log_ratio) {
        out.max_log_ratio = std::max(out.max_log_ratio, r);
        if (r > 0.0) ++out.violations;
    }
    return out;
}

}  // namespace insider
