#include "insider/poisson/intensity.hpp"

#include <cmath>
#include <stdexcept>

#include "insider/kernels/skellam.hpp"

namespace insider {

InsiderIntensityPair insider_intensities(const MarketParams& params, double t, int n_t, int n_T) {
    const double T = params.horizon;
    if (!(t < T)) throw std::domain_error("insider_intensities: need t < horizon");
    if (t < 0.0) throw std::domain_error("insider_intensities: need t >= 0");
    const double rem = T - t;
    const double mu1 = params.intensity1 * rem;
    const double mu2 = params.intensity2 * rem;
    const int y = n_T - n_t;

    if (2.0 * std::sqrt(mu1 * mu2) < 1e-8) {
        // Small remaining time: leading Poisson terms of the Skellam ratios.
        if (y > 0) return {double(y) / rem, params.intensity2 * mu1 / double(y + 1)};
        if (y < 0) return {params.intensity1 * mu2 / double(-y + 1), double(-y) / rem};
        return {params.intensity1 * mu2, params.intensity2 * mu1};
    }

    const SkellamParams sk{mu1, mu2};
    const double lp = skellam_log_pmf(y, sk);
    const double l1 = params.intensity1 * std::exp(skellam_log_pmf(y - 1, sk) - lp);
    const double l2 = params.intensity2 * std::exp(skellam_log_pmf(y + 1, sk) - lp);
    return {l1, l2};
}

}  // namespace insider
