#include "insider/utility/power_dual.hpp"

#include <cmath>
#include <stdexcept>

#include "insider/kernels/parallel.hpp"

namespace insider {

PowerDualValue power_dual_value(const MarketParams& params, double gamma,
                                const TiltControls& controls, int bucket_x, std::size_t n_paths,
                                std::uint64_t seed, int threads) {
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw std::domain_error("power_dual_value: gamma must lie in (0,1)");
    controls.validate();
    const double q = -gamma / (1.0 - gamma);
    std::vector<double> vals(n_paths);
    parallel_for_blocks(n_paths, 4096, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            const JumpPath path = simulate_path(params, stream);
            if (path.terminal_diff() != bucket_x) {
                vals[i] = 0.0;
                continue;
            }
            vals[i] = std::exp(q * tilt_log_density(params, controls, path));
        }
    });
    const Summary s = summarize(vals);
    return {gamma, bucket_x, std::pow(s.mean, 1.0 - gamma), s};
}

PowerDualValue power_dual_running_inf(const MarketParams& params, double gamma,
                                      const std::vector<TiltControls>& family, int bucket_x,
                                      std::size_t n_paths, std::uint64_t seed, int threads) {
    if (family.empty()) throw std::domain_error("power_dual_running_inf: empty family");
    PowerDualValue best = power_dual_value(params, gamma, family[0], bucket_x, n_paths, seed, threads);
    for (std::size_t j = 1; j < family.size(); ++j) {
        const PowerDualValue v =
            power_dual_value(params, gamma, family[j], bucket_x, n_paths, seed, threads);
        if (v.value < best.value) best = v;
    }
    return best;
}

}  // namespace insider
