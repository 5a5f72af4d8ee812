#pragma once

#include <cstdint>
#include <vector>

#include "insider/contg/theta.hpp"
#include "insider/poisson/tilt.hpp"

namespace insider {

// Exploratory evidence rows for the interval criterion
//   sup_Z E[1_{G in (a,a+eps)} log Z_T] >= -P log P - C P:
// the left side is bounded below by the best family member; nothing here
// certifies the supremum over all densities.
struct ProbeRow {
    double a = 0.0;
    double eps = 0.0;
    double prob = 0.0;      // P[G in (a, a+eps)]
    double best_lhs = 0.0;  // max over the family of E[1 log Z_T]
    double best_se = 0.0;
    int best_member = -1;
    double rhs = 0.0;       // -P log P - C P
    bool holds = false;
    bool skipped = false;   // zero-probability interval
    double implied_c = 0.0; // smallest C making this row hold
};

struct ProbeResult {
    std::vector<ProbeRow> rows;
    double candidate_c = 0.0;
    double implied_c = 0.0;  // max over rows of the row-wise requirement
    bool all_hold = false;
    bool exploratory = true;
};

// Poisson market, G = N_T scanned through (possibly fractional) intervals;
// interval probabilities are exact Skellam sums.
ProbeResult nupbr_probe_poisson(const MarketParams& params, const std::vector<TiltControls>& family,
                                const std::vector<std::pair<double, double>>& grid, double c_candidate,
                                std::size_t n_paths, std::uint64_t seed, int threads = 1);

// Theta market, G = S_T (non-atomic); interval probabilities estimated by MC
// on the same ensemble.
ProbeResult nupbr_probe_theta(const ThetaMarket& market,
                              const std::vector<PiecewiseControl>& family,
                              const std::vector<std::pair<double, double>>& grid, double c_candidate,
                              std::size_t n_paths, std::uint64_t seed, int threads = 1);

}  // namespace insider
