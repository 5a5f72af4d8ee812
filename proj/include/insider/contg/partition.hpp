#pragma once

#include <vector>

namespace insider {

// Scalar distribution of the insider's signal used for partitioning.
struct DistSpec {
    enum class Kind { Normal, Uniform };
    Kind kind;
    double p1;  // mean / lower bound
    double p2;  // sigma / upper bound

    static DistSpec normal(double mean, double sigma);
    static DistSpec uniform(double lo, double hi);

    double cdf(double x) const;
    double quantile(double p) const;
    double pdf(double x) const;
};

enum class PartitionMode { EqualWidth, EqualMass };

struct PartitionSpec {
    std::vector<double> edges;  // n+1 increasing edges; +-inf allowed (equal mass)
    std::vector<double> probs;  // per-cell probability
    PartitionMode mode = PartitionMode::EqualWidth;

    int cells() const { return int(probs.size()); }
    double width(int i) const { return edges[i + 1] - edges[i]; }
    int locate(double x) const;  // index of the cell containing x
    double entropy() const;      // -sum p log p over positive-mass cells
    void validate() const;
};

// equal_mass splits at quantiles k/n (outer cells unbounded); equal_width
// splits [lo, hi] evenly, with probabilities summing to the range mass.
PartitionSpec make_partition(const DistSpec& dist, int n, PartitionMode mode, double lo = 0.0,
                             double hi = 0.0);

struct EntropyDecomposition {
    double partition_entropy;  // H(G^n)
    double differential_term;  // -int f log f over the range (quadrature)
    double width_term;         // -sum log|cell| P[cell]
    double residual;           // H - (differential + width)
};

// Splits the partition entropy into the differential entropy plus the width
// correction; the residual vanishes as the equal-width partition refines.
EntropyDecomposition entropy_decomposition_check(const DistSpec& dist,
                                                 const PartitionSpec& partition);

}  // namespace insider
