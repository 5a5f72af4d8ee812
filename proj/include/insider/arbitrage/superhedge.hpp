#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "insider/poisson/market.hpp"
#include "insider/poisson/tilt.hpp"

namespace insider {

// Superhedging price of the indicator 1_{N_T = x} in the public two-Poisson
// market: 1 for x <= 0, exp(-x) for x > 0.
double superhedge_indicator_public(int x);

enum class ArbitrageVerdict { None, Optimal, StrongOptimal };

std::string to_string(ArbitrageVerdict v);

// Insider superhedging price of the constant claim 1, one price per value of
// the signal N_T over a truncation range.
struct SuperhedgePriceMap {
    std::map<int, double> price_by_signal;
    int g_min = 0;
    int g_max = 0;
    double covered_mass = 0.0;
};

// Symmetric signal range holding at least 1 - mass_tol of the Skellam mass.
std::pair<int, int> default_signal_range(const MarketParams& params, double mass_tol = 1e-10);

// The insider price of the claim 1 decomposes over the signal events: on
// {N_T = g} it equals the public superhedging price of 1_{N_T = g}.
SuperhedgePriceMap superhedge_insider_combine(const MarketParams& params, int g_min, int g_max,
                                              double coverage_tol = 1e-10);

ArbitrageVerdict classify_arbitrage(const SuperhedgePriceMap& map);

struct ReplicationResult {
    double initial_cost;    // exp(-N_T)
    double terminal_wealth; // cost + (1/S_T)(S_T - S_0), equals 1
    double min_wealth;      // pathwise floor of the hedge portfolio
};

// Buy-and-hold hedge of the claim 1 for an insider who knows S_T: buy 1/S_T
// units at cost exp(-N_T) and hold to maturity.
ReplicationResult replicate_buy_and_hold(const JumpPath& path);

struct ProbeEstimate {
    double estimate = 0.0;
    double se = 0.0;
    std::size_t n_paths = 0;
};

// Probability of {N_T = x} under the tilted measure given by the controls; a
// constructive lower-bound probe of the supremum over martingale measures.
ProbeEstimate mc_emm_probe(const MarketParams& params, int x, const TiltControls& controls,
                           std::size_t n_paths, std::uint64_t seed, int threads = 1);

// One JSON record per signal value plus a verdict object.
std::string price_map_to_json(const SuperhedgePriceMap& map);

}  // namespace insider
