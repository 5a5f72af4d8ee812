#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace insider {

struct Summary {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean
    std::size_t n = 0;
};

// Mean and standard error via fixed-shape pairwise sums (deterministic).
Summary summarize(const std::vector<double>& xs);

// Two-sided Kolmogorov-Smirnov statistic of the samples against cdf.
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// 95% acceptance threshold 1.36/sqrt(n) for the two-sided KS test.
double ks_threshold_95(std::size_t n);

}  // namespace insider
