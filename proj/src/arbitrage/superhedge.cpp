#include "insider/arbitrage/superhedge.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "insider/kernels/parallel.hpp"
#include "insider/kernels/skellam.hpp"
#include "insider/kernels/stats.hpp"

namespace insider {

double superhedge_indicator_public(int x) { return x <= 0 ? 1.0 : std::exp(double(-x)); }

std::string to_string(ArbitrageVerdict v) {
    switch (v) {
        case ArbitrageVerdict::None: return "none";
        case ArbitrageVerdict::Optimal: return "optimal";
        case ArbitrageVerdict::StrongOptimal: return "strong_optimal";
    }
    return "?";
}

std::pair<int, int> default_signal_range(const MarketParams& params, double mass_tol) {
    const SkellamParams sk{params.intensity1 * params.horizon, params.intensity2 * params.horizon};
    int k = 1;
    double mass = skellam_pmf(0, sk);
    while (mass < 1.0 - mass_tol && k < 100000) {
        mass += skellam_pmf(k, sk) + skellam_pmf(-k, sk);
        ++k;
    }
    return {-k, k};
}

SuperhedgePriceMap superhedge_insider_combine(const MarketParams& params, int g_min, int g_max,
                                              double coverage_tol) {
    if (g_min > g_max) throw std::domain_error("superhedge_insider_combine: empty range");
    const SkellamParams sk{params.intensity1 * params.horizon, params.intensity2 * params.horizon};
    SuperhedgePriceMap map;
    map.g_min = g_min;
    map.g_max = g_max;
    double mass = 0.0;
    for (int g = g_min; g <= g_max; ++g) {
        map.price_by_signal[g] = superhedge_indicator_public(g);
        mass += skellam_pmf(g, sk);
    }
    map.covered_mass = mass;
    if (mass < 1.0 - coverage_tol)
        throw std::domain_error("superhedge_insider_combine: range covers too little signal mass");
    return map;
}

ArbitrageVerdict classify_arbitrage(const SuperhedgePriceMap& map) {
    if (map.price_by_signal.empty()) throw std::domain_error("classify_arbitrage: empty map");
    bool any_below = false, all_below = true;
    for (const auto& [g, price] : map.price_by_signal) {
        if (price < 0.0 || price > 1.0)
            throw std::domain_error("classify_arbitrage: price outside [0,1]");
        if (price < 1.0)
            any_below = true;
        else
            all_below = false;
    }
    if (!any_below) return ArbitrageVerdict::None;
    return all_below ? ArbitrageVerdict::StrongOptimal : ArbitrageVerdict::Optimal;
}

ReplicationResult replicate_buy_and_hold(const JumpPath& path) {
    const int n_T = path.terminal_diff();
    const double units = std::exp(double(-n_T));  // 1/S_T
    const double cost = units;                    // S_0 = 1
    // Wealth path: cost + units * (S_t - S_0) = units * S_t; its floor over
    // the path is at the minimum of N1 - N2.
    int n = 0, n_min = 0;
    for (const auto& [t, is_first] : path.merged_jumps()) {
        (void)t;
        n += is_first ? 1 : -1;
        n_min = std::min(n_min, n);
    }
    const double s_T = std::exp(double(n_T));
    const double wealth = cost + units * (s_T - 1.0);
    const double floor = units * std::exp(double(n_min));
    return {cost, wealth, floor};
}

ProbeEstimate mc_emm_probe(const MarketParams& params, int x, const TiltControls& controls,
                           std::size_t n_paths, std::uint64_t seed, int threads) {
    controls.validate();
    std::vector<double> ind(n_paths);
    parallel_for_blocks(n_paths, 4096, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            const TiltedPath tp = simulate_tilted_path(params, controls, stream);
            ind[i] = tp.path.terminal_diff() == x ? 1.0 : 0.0;
        }
    });
    const Summary s = summarize(ind);
    return {s.mean, s.se, n_paths};
}

std::string price_map_to_json(const SuperhedgePriceMap& map) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [g, price] : map.price_by_signal)
        records.push_back({{"g", g}, {"price", price}, {"analytic", true}});
    nlohmann::json out;
    out["prices"] = records;
    out["verdict"] = {{"kind", to_string(classify_arbitrage(map))},
                      {"covered_mass", map.covered_mass},
                      {"g_min", map.g_min},
                      {"g_max", map.g_max}};
    return out.dump(2);
}

}  // namespace insider
