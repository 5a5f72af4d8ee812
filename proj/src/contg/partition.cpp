#include "insider/contg/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "insider/kernels/gaussian.hpp"
#include "insider/kernels/quadrature.hpp"

namespace insider {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

DistSpec DistSpec::normal(double mean, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("DistSpec: sigma must be > 0");
    return {Kind::Normal, mean, sigma};
}

DistSpec DistSpec::uniform(double lo, double hi) {
    if (!(hi > lo)) throw std::domain_error("DistSpec: need hi > lo");
    return {Kind::Uniform, lo, hi};
}

double DistSpec::cdf(double x) const {
    if (kind == Kind::Normal) return norm_cdf((x - p1) / p2);
    if (x <= p1) return 0.0;
    if (x >= p2) return 1.0;
    return (x - p1) / (p2 - p1);
}

double DistSpec::quantile(double p) const {
    if (kind == Kind::Normal) return p1 + p2 * norm_quantile(p);
    if (!(p >= 0.0) || !(p <= 1.0)) throw std::domain_error("quantile: p outside [0,1]");
    return p1 + p * (p2 - p1);
}

double DistSpec::pdf(double x) const {
    if (kind == Kind::Normal) return norm_pdf((x - p1) / p2) / p2;
    return (x >= p1 && x <= p2) ? 1.0 / (p2 - p1) : 0.0;
}

int PartitionSpec::locate(double x) const {
    const auto it = std::upper_bound(edges.begin(), edges.end(), x);
    const int idx = int(it - edges.begin()) - 1;
    if (idx < 0 || idx >= cells()) return -1;
    return idx;
}

double PartitionSpec::entropy() const {
    double h = 0.0;
    for (double p : probs)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

void PartitionSpec::validate() const {
    if (edges.size() != probs.size() + 1 || probs.empty())
        throw std::domain_error("PartitionSpec: edges must outnumber cells by one");
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (!(edges[i] < edges[i + 1])) throw std::domain_error("PartitionSpec: edges not increasing");
    for (double p : probs)
        if (p < 0.0) throw std::domain_error("PartitionSpec: negative cell probability");
}

PartitionSpec make_partition(const DistSpec& dist, int n, PartitionMode mode, double lo,
                             double hi) {
    if (n < 1) throw std::domain_error("make_partition: n must be >= 1");
    PartitionSpec out;
    out.mode = mode;
    out.edges.resize(std::size_t(n) + 1);
    out.probs.resize(std::size_t(n));
    if (mode == PartitionMode::EqualMass) {
        out.edges[0] = -kInf;
        out.edges[std::size_t(n)] = kInf;
        for (int k = 1; k < n; ++k) {
            out.edges[std::size_t(k)] = dist.quantile(double(k) / double(n));
            if (k > 1 && !(out.edges[std::size_t(k)] > out.edges[std::size_t(k - 1)]))
                throw std::domain_error("make_partition: quantiles not distinct at this n");
        }
        for (int i = 0; i < n; ++i) {
            const double c0 = i == 0 ? 0.0 : dist.cdf(out.edges[std::size_t(i)]);
            const double c1 = i == n - 1 ? 1.0 : dist.cdf(out.edges[std::size_t(i) + 1]);
            out.probs[std::size_t(i)] = c1 - c0;
        }
    } else {
        if (!(hi > lo)) throw std::domain_error("make_partition: equal_width needs hi > lo");
        const double w = (hi - lo) / double(n);
        for (int k = 0; k <= n; ++k) out.edges[std::size_t(k)] = lo + w * double(k);
        for (int i = 0; i < n; ++i)
            out.probs[std::size_t(i)] =
                dist.cdf(out.edges[std::size_t(i) + 1]) - dist.cdf(out.edges[std::size_t(i)]);
    }
    out.validate();
    return out;
}

EntropyDecomposition entropy_decomposition_check(const DistSpec& dist,
                                                 const PartitionSpec& partition) {
    if (partition.mode != PartitionMode::EqualWidth)
        throw std::domain_error("entropy_decomposition_check: equal-width partitions only");
    partition.validate();
    const double lo = partition.edges.front();
    const double hi = partition.edges.back();
    auto f_log_f = [&](double x) {
        const double f = dist.pdf(x);
        return f > 0.0 ? -f * std::log(f) : 0.0;
    };
    EntropyDecomposition out;
    out.partition_entropy = partition.entropy();
    out.differential_term = adaptive_integral(f_log_f, lo, hi, 1e-10);
    double width_term = 0.0;
    for (int i = 0; i < partition.cells(); ++i)
        width_term -= std::log(partition.width(i)) * partition.probs[std::size_t(i)];
    out.width_term = width_term;
    out.residual = out.partition_entropy - (out.differential_term + out.width_term);
    return out;
}

}  // namespace insider
