#include "insider/kernels/stats.hpp"

#include <algorithm>
#include <cmath>

#include "insider/kernels/parallel.hpp"

namespace insider {

Summary summarize(const std::vector<double>& xs) {
    Summary s;
    s.n = xs.size();
    if (s.n == 0) return s;
    const double sum = pairwise_sum(xs);
    s.mean = sum / double(s.n);
    if (s.n == 1) return s;
    std::vector<double> sq(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double d = xs[i] - s.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / double(s.n - 1);
    s.se = std::sqrt(var / double(s.n));
    return s;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        d = std::max(d, std::abs(double(i + 1) / n - F));
        d = std::max(d, std::abs(F - double(i) / n));
    }
    return d;
}

double ks_threshold_95(std::size_t n) { return 1.36 / std::sqrt(double(n)); }

}  // namespace insider
