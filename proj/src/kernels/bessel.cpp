#include "insider/kernels/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace insider {

namespace {

constexpr double kSeriesCutoff = 15.0;

// Power series sum_{m>=0} (x/2)^{n+2m} / (m! (n+m)!), carried as ratios
// relative to the leading term so only the final log sees large magnitudes.
double log_series(unsigned n, double x) {
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = 1.0;
    double sum = 1.0;
    for (unsigned m = 0; m < 4000; ++m) {
        term *= h2 / (double(m + 1) * double(n + m + 1));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    const double lead = n == 0 ? 0.0 : double(n) * std::log(h) - std::lgamma(double(n) + 1.0);
    return lead + std::log(sum);
}

// Downward recurrence I_{k-1} = I_{k+1} + (2k/x) I_k from a high trial order,
// normalized against e^x = I_0 + 2 sum_{k>=1} I_k. All quantities are
// rescaled together when they grow, so the result is a pure ratio.
double log_miller(unsigned n, double x) {
    const unsigned start = n + unsigned(std::ceil(9.5 * std::sqrt(x))) + 30;
    double fkp1 = 0.0;   // I_{k+1}, unnormalized
    double fk = 1.0;     // I_k
    double norm = 0.0;   // running I_0 + 2 sum I_k
    double target = 0.0; // unnormalized I_n in the current scale
    for (unsigned k = start; k-- > 0;) {
        const double fkm1 = fkp1 + (2.0 * double(k + 1) / x) * fk;
        fkp1 = fk;
        fk = fkm1;
        norm += 2.0 * fkp1;
        if (k + 1 == n) target = fkp1;
        if (fk > 1e250) {
            fkp1 *= 1e-250;
            fk *= 1e-250;
            norm *= 1e-250;
            target *= 1e-250;
        }
    }
    norm += fk;  // I_0 term
    if (n == 0) target = fk;
    return std::log(target) - std::log(norm) + x;
}

}  // namespace

double bessel_log_i(BesselOrder order, double x) {
    if (!std::isfinite(x) || x < 0.0) throw std::domain_error("bessel_log_i: x must be finite and >= 0");
    const unsigned n = order.n;
    if (x == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    if (x < kSeriesCutoff) return log_series(n, x);
    return log_miller(n, x);
}

double bessel_log_i(int order, double x) { return bessel_log_i(BesselOrder::of(order), x); }

double bessel_i(BesselOrder order, double x) {
    if (!std::isfinite(x) || x < 0.0) throw std::domain_error("bessel_i: x must be finite and >= 0");
    if (x == 0.0) return order.n == 0 ? 1.0 : 0.0;
    return std::exp(bessel_log_i(order, x));
}

double bessel_i(int order, double x) { return bessel_i(BesselOrder::of(order), x); }

double bessel_ratio(int a, int b, double x) {
    return std::exp(bessel_log_i(a, x) - bessel_log_i(b, x));
}

}  // namespace insider
