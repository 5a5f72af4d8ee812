#pragma once

#include <cstdint>
#include <vector>

#include "insider/kernels/rng.hpp"

namespace insider {

// Jump market with the martingale constraint theta a1 + (1-theta) a2 = 1 on
// its density controls, so every control is bounded and the density family is
// uniformly integrable. Volatility sigma(t) = sigma0 + sigma1 t (continuous,
// non-constant for sigma1 != 0) makes the terminal price non-atomic.
struct ThetaMarket {
    double theta = 0.5;
    double horizon = 1.0;
    double sigma0 = 0.2;
    double sigma1 = 0.3;

    double sigma(double t) const { return sigma0 + sigma1 * t; }
};

// alpha1 on [0, horizon], piecewise constant: value[i] on [knots[i], knots[i+1]).
struct PiecewiseControl {
    std::vector<double> knots;   // increasing, first 0, last horizon
    std::vector<double> values;  // size = knots.size() - 1

    double at(double t) const;
    void validate(double horizon) const;
};

PiecewiseControl random_feasible_control(const ThetaMarket& market, SeededStream& stream,
                                         int n_pieces);

struct UiBoundResult {
    double max_log_ratio;      // max over paths of log(Z_T / bound); <= 0 expected
    std::size_t violations;    // paths with Z_T > bound
    std::size_t n_paths;
};

// Pathwise check that every density in the constrained family satisfies
// Z_T <= exp(2T) theta^{-N1_T} (1-theta)^{-N2_T}.
UiBoundResult ui_bound_check(const ThetaMarket& market,
                             const std::vector<PiecewiseControl>& controls,
                             std::size_t paths_per_control, std::uint64_t seed, int threads = 1);

// log Z_T along a path of unit-rate jump times for a feasible control.
double theta_log_density(const ThetaMarket& market, const PiecewiseControl& control,
                         const std::vector<double>& jumps1, const std::vector<double>& jumps2);

// Terminal price S_T of the theta market along a path (non-atomic signal).
double theta_terminal_price(const ThetaMarket& market, const std::vector<double>& jumps1,
                            const std::vector<double>& jumps2);

}  // namespace insider
