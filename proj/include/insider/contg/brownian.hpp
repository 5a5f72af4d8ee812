#pragma once

#include <cstdint>

#include "insider/contg/partition.hpp"
#include "insider/kernels/stats.hpp"

namespace insider {

// Driftless complete market on a Brownian driver: the discounted price is a
// reference-measure martingale, so public log-utility is zero and the
// insider's value is pure information.
struct BrownianMarket {
    double horizon = 1.0;
    double sigma = 1.0;
};

// Conditional probability density p^cell_t = P[W_T in (a,b) | W_t = w] /
// P[W_T in (a,b)] for a standard Brownian motion.
double cell_density(double a, double b, double cell_prob, double t_rem, double w);

// Information drift d/dw log P[W_T in (a,b) | W_t = w].
double information_drift(double a, double b, double t_rem, double w);

struct BsExperimentResult {
    Summary value;           // MC mean of (1/2) int_0^{T-delta} drift^2 dt
    double target_entropy;   // H(G^n) of the partition
    double tail_correction;  // E[remaining cell entropy at T-delta], quadrature
    double target;           // H - tail_correction
    double gap;              // value - target
    double allowance;        // stated grid-bias allowance
    bool pass;               // |gap| <= 3 SE + allowance
    double delta;
    std::size_t n_steps;
};

// Simulates the Brownian driver on a uniform grid (geometric tail refinement
// when delta is below 8 grid steps), accumulates the log-optimal insider
// value (1/2) int drift^2 dt for the realized cell of W_T, and compares to
// the partition entropy minus the analytic cutoff correction.
BsExperimentResult bs_insider_experiment(const BrownianMarket& market,
                                         const PartitionSpec& cells, std::size_t n_paths,
                                         std::size_t n_steps, std::uint64_t seed,
                                         double delta = -1.0, int threads = 1);

// E[H(cell | W_{T-delta})]: expected conditional partition entropy one cutoff
// before the horizon, by Gaussian quadrature. The exact truncation loss of
// the experiment's value integral.
double expected_remaining_entropy(const BrownianMarket& market, const PartitionSpec& cells,
                                  double delta);

}  // namespace insider
