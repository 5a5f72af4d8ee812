#pragma once

#include <cstdint>
#include <vector>

#include "insider/kernels/stats.hpp"
#include "insider/poisson/tilt.hpp"

namespace insider {

struct PowerDualValue {
    double gamma;
    int bucket;
    double value;   // E[Z_T^{-gamma/(1-gamma)} 1_{N_T = x}]^{1-gamma}
    Summary raw;    // the inner expectation
};

// Upper-bound certificate for the power-utility primal on one signal bucket,
// evaluated for the parametrized density given by the controls.
PowerDualValue power_dual_value(const MarketParams& params, double gamma,
                                const TiltControls& controls, int bucket_x, std::size_t n_paths,
                                std::uint64_t seed, int threads = 1);

// Running infimum over several candidate densities.
PowerDualValue power_dual_running_inf(const MarketParams& params, double gamma,
                                      const std::vector<TiltControls>& family, int bucket_x,
                                      std::size_t n_paths, std::uint64_t seed, int threads = 1);

}  // namespace insider
