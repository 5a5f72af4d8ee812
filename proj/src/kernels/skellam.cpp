#include "insider/kernels/skellam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "insider/kernels/bessel.hpp"

namespace insider {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_params(SkellamParams p) {
    if (!std::isfinite(p.mu1) || !std::isfinite(p.mu2) || p.mu1 < 0.0 || p.mu2 < 0.0)
        throw std::domain_error("skellam: means must be finite and >= 0");
}

double log_poisson(int k, double mu) {
    if (k < 0) return kNegInf;
    if (mu == 0.0) return k == 0 ? 0.0 : kNegInf;
    return -mu + double(k) * std::log(mu) - std::lgamma(double(k) + 1.0);
}

}  // namespace

double skellam_log_pmf(int k, SkellamParams params) {
    check_params(params);
    if (params.mu1 == 0.0 && params.mu2 == 0.0) return k == 0 ? 0.0 : kNegInf;
    if (params.mu2 == 0.0) return log_poisson(k, params.mu1);
    if (params.mu1 == 0.0) return log_poisson(-k, params.mu2);
    const double z = 2.0 * std::sqrt(params.mu1 * params.mu2);
    return -(params.mu1 + params.mu2) + 0.5 * double(k) * (std::log(params.mu1) - std::log(params.mu2)) +
           bessel_log_i(k, z);
}

double skellam_pmf(int k, SkellamParams params) { return std::exp(skellam_log_pmf(k, params)); }

SkellamEntropy skellam_entropy(SkellamParams params, double tail_tol) {
    check_params(params);
    if (!(tail_tol > 0.0) || tail_tol > 1e-6)
        throw std::domain_error("skellam_entropy: tail_tol must lie in (0, 1e-6]");
    if (params.mu1 == 0.0 && params.mu2 == 0.0) return {0.0, 1.0, 0.0, 0, 0};

    const int mode = int(std::lround(params.mu1 - params.mu2));
    // -p log p of an atom; zero-probability atoms contribute nothing.
    auto h = [&](int k) {
        const double lp = skellam_log_pmf(k, params);
        return lp == kNegInf ? 0.0 : -std::exp(lp) * lp;
    };
    auto p = [&](int k) { return skellam_pmf(k, params); };

    double entropy = h(mode);
    double mass = p(mode);
    int lo = mode, hi = mode;
    // Expand until the captured mass criterion holds and both edge atoms are
    // entropy-negligible; the tail then decays at least geometrically.
    const double edge_tol = 1e-18;
    for (int step = 0; step < 200000; ++step) {
        const double h_lo = h(lo - 1), h_hi = h(hi + 1);
        const bool mass_ok = mass >= 1.0 - tail_tol;
        if (mass_ok && h_lo < edge_tol && h_hi < edge_tol) break;
        if (h_lo >= h_hi) {
            --lo;
            entropy += h_lo;
            mass += p(lo);
        } else {
            ++hi;
            entropy += h_hi;
            mass += p(hi);
        }
    }
    const double bound = 8.0 * (h(lo - 1) + h(hi + 1) + p(lo - 1) + p(hi + 1));
    return {entropy, mass, bound, lo, hi};
}

}  // namespace insider
