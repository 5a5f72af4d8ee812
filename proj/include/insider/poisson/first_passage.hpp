#pragma once

#include <cstdint>

#include "insider/poisson/market.hpp"

namespace insider {

struct FirstPassageEstimate {
    double estimate = 0.0;
    double se = 0.0;
    std::size_t n_paths = 0;
    double mean_hit_time = 0.0;        // among hitting paths
    double truncation_bias_bound = 0.0;  // one-sided, from the maximal inequality
    double horizon = 0.0;
};

// P[sup_t (N1_t - N2_t) >= level] for N1 at rate alpha1 and N2 at rate
// e * alpha1, estimated on a truncation horizon. The walk drifts to -infinity,
// so truncation bias is one-sided; exp(N) is a nonnegative martingale, so the
// per-path residual reach probability is bounded by exp(-(level - N_horizon)).
FirstPassageEstimate estimate_first_passage(int level, std::size_t n_paths, std::uint64_t seed,
                                            double horizon = 50.0, double alpha1 = 1.0,
                                            int threads = 1);

// Whether sup_t (N1_t - N2_t) >= level along the given path.
bool hits_level(const JumpPath& path, int level);

struct RecursionResidual {
    double residual;  // f(x+1) - f(x) - (f(x) - f(x-1))/e
    double se;        // propagated from the three estimates
};

RecursionResidual first_passage_recursion_residual(const FirstPassageEstimate& lo,
                                                   const FirstPassageEstimate& mid,
                                                   const FirstPassageEstimate& hi);

}  // namespace insider
