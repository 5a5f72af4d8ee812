#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "insider/kernels/stats.hpp"
#include "insider/poisson/market.hpp"

namespace insider {

// Integrand of the constructive dual bound on the insider's log-utility:
//   (l1+l2) log((l1+l2)/(e+1)) - l1 + 2,
// the maximized density drift under the constraint alpha2 = e * alpha1.
double dual_integrand(double lambda1, double lambda2);

// Integrand whose conditional time integral reproduces -log P[N_T = x]:
//   l1 log l1 + l2 log l2 - l1 - l2 + 2.
double entropy_integrand(double lambda1, double lambda2);

// Time integrals of the integrands along one path's insider intensity curves,
// by adaptive quadrature between jumps (singular handling on the last leg).
double pathwise_dual_integral(const MarketParams& params, const JumpPath& path,
                              double abs_tol = 1e-9);
double pathwise_entropy_integral(const MarketParams& params, const JumpPath& path,
                                 double abs_tol = 1e-9);

struct BucketRow {
    int x;
    std::size_t count;
    double mean;
    double se;
    double target;
    bool pass;  // |mean - target| <= 3 se
};

struct EntropyIdentityResult {
    std::vector<BucketRow> buckets;   // conditional means vs -log pmf
    Summary aggregate;                // unconditional mean
    double entropy_target;            // Skellam entropy
    bool aggregate_pass;
};

// Conditional means of the entropy integral per N_T bucket against
// -log P[N_T = x], plus the aggregate against the Skellam entropy.
EntropyIdentityResult entropy_identity_check(const MarketParams& params, std::size_t n_paths,
                                             std::uint64_t seed, int x_min, int x_max,
                                             std::size_t min_bucket = 0, int threads = 1);

struct DualIntegralEstimate {
    Summary aggregate;
    std::map<int, Summary> by_bucket;  // conditional means given N_T = x
    std::map<int, std::size_t> bucket_counts;
};

DualIntegralEstimate dual_integral_estimate(const MarketParams& params, std::size_t n_paths,
                                            std::uint64_t seed, int threads = 1);

struct EpsilonRow {
    double epsilon;
    double log_wealth_mean;
    double log_wealth_se;
    double gap_mean;  // E[log V] - (H + D), paired per path
    double gap_se;
    bool pass;
};

struct InsiderUtilityReport {
    std::size_t n_paths = 0;
    double epsilon = 0.0;
    Summary log_wealth;        // at the headline epsilon
    Summary dual_integral;     // mean of the dual integrand's time integral
    double entropy = 0.0;      // Skellam entropy of N_T
    double dual_bound = 0.0;   // H - E[dual integral]: the duality target
    double gap_mean = 0.0;
    double gap_se = 0.0;
    bool pass = false;
    double public_log_utility = 0.0;  // closed form for the public market
    double additional_utility = 0.0;  // E[log V] - public value
    std::vector<EpsilonRow> epsilon_rows;
};

// Primal MC of E[log V] under the eps-stopped optimal fraction against the
// dual target H + D on a common path ensemble; gap is paired per path.
InsiderUtilityReport insider_log_utility_report(
    const MarketParams& params, std::size_t n_paths, std::uint64_t seed, double epsilon = 1e-3,
    int threads = 1, const std::vector<double>& sweep_epsilons = {1e-2, 1e-3, 1e-4});

// Closed-form log-utility of the public market over [0, T].
double public_log_utility(const MarketParams& params);

}  // namespace insider
