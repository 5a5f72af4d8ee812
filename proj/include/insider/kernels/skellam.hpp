#pragma once

namespace insider {

// Means of the two independent Poisson counts whose difference is observed.
struct SkellamParams {
    double mu1;
    double mu2;
};

// log P[K = k] with K = Pois(mu1) - Pois(mu2),
// pmf(k) = exp(-(mu1+mu2)) (mu1/mu2)^{k/2} I_{|k|}(2 sqrt(mu1 mu2)).
double skellam_log_pmf(int k, SkellamParams params);
double skellam_pmf(int k, SkellamParams params);

struct SkellamEntropy {
    double value;             // -sum p_k log p_k over [k_min, k_max]
    double captured_mass;     // sum p_k over the same range
    double truncation_bound;  // bound on the dropped -p log p tail
    int k_min;
    int k_max;
};

// Shannon entropy of the Skellam law, summed over a symmetric range around
// the mode that captures mass >= 1 - tail_tol.
SkellamEntropy skellam_entropy(SkellamParams params, double tail_tol = 1e-12);

}  // namespace insider
