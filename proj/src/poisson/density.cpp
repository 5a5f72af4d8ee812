#include "insider/poisson/density.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace insider {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_poisson(int k, double mu) {
    if (k < 0) return kNegInf;
    if (mu == 0.0) return k == 0 ? 0.0 : kNegInf;
    return -mu + double(k) * std::log(mu) - std::lgamma(double(k) + 1.0);
}

// log sum_{k >= max(0,-delta)} P[Pois(mu2) = k] P[Pois(mu1) = k + delta].
double log_pair_series(int delta, double mu1, double mu2) {
    if (mu1 == 0.0 && mu2 == 0.0) return delta == 0 ? 0.0 : kNegInf;
    if (mu2 == 0.0) return log_poisson(delta, mu1);
    if (mu1 == 0.0) return log_poisson(-delta, mu2);
    const int k0 = std::max(0, -delta);
    const double log_lead = log_poisson(k0, mu2) + log_poisson(k0 + delta, mu1);
    const double r = mu1 * mu2;
    double term = 1.0;
    double sum = 1.0;
    for (int k = k0; k < k0 + 100000; ++k) {
        term *= r / (double(k + 1) * double(k + delta + 1));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return log_lead + std::log(sum);
}

}  // namespace

DensityEval::DensityEval(const MarketParams& params, int x) : params_(params), x_(x) {
    log_den_ = log_pair_series(x, params.intensity1 * params.horizon, params.intensity2 * params.horizon);
}

double DensityEval::log_given_diff(double t, int n_t) const {
    const double T = params_.horizon;
    if (t < 0.0 || t >= T) throw std::domain_error("DensityEval: need 0 <= t < horizon");
    const double rem = T - t;
    const double log_num =
        log_pair_series(x_ - n_t, params_.intensity1 * rem, params_.intensity2 * rem);
    return log_num - log_den_;
}

double DensityEval::log_at(double t, const JumpPath& path) const {
    const double T = params_.horizon;
    if (t < 0.0 || t > T) throw std::domain_error("DensityEval: t outside [0, horizon]");
    if (t == T) {
        // Indicator form: 1_{N_T = x} over the unconditional probability.
        return path.terminal_diff() == x_ ? -log_den_ : kNegInf;
    }
    return log_given_diff(t, path.diff(t));
}

double DensityEval::at(double t, const JumpPath& path) const { return std::exp(log_at(t, path)); }

double conditional_density(const MarketParams& params, int x, double t, const JumpPath& path) {
    return DensityEval(params, x).at(t, path);
}

double qi_weight(const MarketParams& params, int g, double t, const JumpPath& path) {
    return conditional_density(params, g, t, path);
}

}  // namespace insider
