#pragma once

#include "insider/poisson/market.hpp"

namespace insider {

// Pathwise evaluator of the conditional density
//   p^x_t = P[N_T = x | F_t] / P[N_T = x]
// for the two-Poisson market, N = N1 - N2. Both numerator and denominator are
// series of products of Poisson weights, summed in log space with term-ratio
// truncation at 1e-17 of the running sum. At t = horizon the numerator
// degenerates to the indicator 1_{N_T = x}.
class DensityEval {
public:
    DensityEval(const MarketParams& params, int x);

    double log_at(double t, const JumpPath& path) const;
    double at(double t, const JumpPath& path) const;

    // Same, with the diff N_t supplied directly (t < horizon).
    double log_given_diff(double t, int n_t) const;

    int x() const { return x_; }
    double log_denominator() const { return log_den_; }

private:
    MarketParams params_;
    int x_;
    double log_den_;
};

double conditional_density(const MarketParams& params, int x, double t, const JumpPath& path);

// Density of the insider's conditioned measure restricted to F_t: the weight
// p^g_t that turns reference-measure samples into samples under the measure
// giving full mass to {N_T = g}.
double qi_weight(const MarketParams& params, int g, double t, const JumpPath& path);

}  // namespace insider
