#pragma once

#include <stdexcept>

#include "insider/kernels/rng.hpp"

namespace insider {

// CDF of Z = (alpha X)/(beta Y) for independent X ~ Exp(alpha), Y ~ Exp(beta):
// the density is 1/(1+z)^2, so P[Z <= z] = z/(1+z).
inline double ratio_exp_cdf(double z) {
    if (!(z > 0.0)) throw std::domain_error("ratio_exp_cdf: z must be > 0");
    return z / (1.0 + z);
}

inline double ratio_exp_sample(double alpha, double beta, SeededStream& stream) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::domain_error("ratio_exp_sample: rates must be > 0");
    const double x = stream.exponential(alpha);
    const double y = stream.exponential(beta);
    return (alpha * x) / (beta * y);
}

}  // namespace insider
