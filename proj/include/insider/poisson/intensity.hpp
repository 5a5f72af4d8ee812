#pragma once

#include "insider/poisson/market.hpp"

namespace insider {

// Jump intensities of N1 and N2 in the filtration enlarged with N_T. With
// y = n_T - n_t and unit reference intensities these are the Bessel ratios
//   lambda1 = I_{|y-1|}(2(T-t)) / I_{|y|}(2(T-t)),
//   lambda2 = I_{|y+1|}(2(T-t)) / I_{|y|}(2(T-t)).
struct InsiderIntensityPair {
    double lambda1;
    double lambda2;
};

InsiderIntensityPair insider_intensities(const MarketParams& params, double t, int n_t, int n_T);

}  // namespace insider
