#pragma once

#include "insider/poisson/intensity.hpp"
#include "insider/poisson/market.hpp"

namespace insider {

// Admissible open interval for the wealth fraction in the risky asset:
// both jump factors 1 + (e-1)pi and 1 + (1/e-1)pi must stay positive.
double pi_lower_bound();  // -1/(e-1)
double pi_upper_bound();  // 1/(1-1/e)

struct OptimalFraction {
    double value;
    bool boundary;  // one intensity vanished; value sits on the open-interval edge
};

// Maximizer of l1 log(1+(e-1)pi) + l2 log(1+(1/e-1)pi):
//   pi* = (l1 (e-1) + l2 (1/e-1)) / ((e-1)(1-1/e)(l1+l2)).
// Throws for l1 = l2 = 0 (callers substitute pi = 0).
OptimalFraction optimal_fraction(double lambda1, double lambda2);

struct EpsilonStopping {
    double epsilon;  // in (0,1): trade until an intensity exits (eps, 1/eps)
};

// First time either insider intensity leaves (eps, 1/eps), capped at the
// horizon. Intensities are monotone in time between jumps, so each segment is
// resolved by endpoint checks plus bisection.
double epsilon_stopping_time(const MarketParams& params, const JumpPath& path, double epsilon);

struct LogWealthResult {
    double log_wealth;
    double stop_time;
    int jumps_used;
};

// Terminal log-wealth of the insider strategy pi*(t) 1_{t <= tau_eps}:
// a pure jump sum, with pi* evaluated at each jump's left limit using the
// terminal value N_T read from the full path.
LogWealthResult simulate_log_wealth(const MarketParams& params, const JumpPath& path,
                                    EpsilonStopping stopping);

}  // namespace insider
