#include "insider/poisson/first_passage.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "insider/kernels/parallel.hpp"
#include "insider/kernels/stats.hpp"

namespace insider {

namespace {
constexpr double kE = 2.718281828459045;
}

bool hits_level(const JumpPath& path, int level) {
    if (level <= 0) return true;
    int n = 0;
    for (const auto& [t, is_first] : path.merged_jumps()) {
        (void)t;
        n += is_first ? 1 : -1;
        if (n >= level) return true;
    }
    return false;
}

FirstPassageEstimate estimate_first_passage(int level, std::size_t n_paths, std::uint64_t seed,
                                            double horizon, double alpha1, int threads) {
    if (!(horizon > 0.0)) throw std::domain_error("estimate_first_passage: horizon must be > 0");
    if (!(alpha1 > 0.0)) throw std::domain_error("estimate_first_passage: alpha1 must be > 0");
    FirstPassageEstimate out;
    out.n_paths = n_paths;
    out.horizon = horizon;
    if (level <= 0) {
        out.estimate = 1.0;
        out.mean_hit_time = 0.0;
        return out;
    }
    std::vector<double> hit(n_paths), hit_time(n_paths), residual(n_paths);
    const double rate1 = alpha1, rate2 = kE * alpha1;
    parallel_for_blocks(n_paths, 4096, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            // Event-by-event walk; stop at the level or the horizon.
            double t = 0.0;
            int n = 0;
            double t1 = stream.exponential(rate1);
            double t2 = stream.exponential(rate2);
            bool reached = false;
            while (true) {
                const bool first = t1 <= t2;
                t = first ? t1 : t2;
                if (t > horizon) break;
                n += first ? 1 : -1;
                if (n >= level) {
                    reached = true;
                    break;
                }
                if (first)
                    t1 += stream.exponential(rate1);
                else
                    t2 += stream.exponential(rate2);
            }
            hit[i] = reached ? 1.0 : 0.0;
            hit_time[i] = reached ? t : 0.0;
            residual[i] = reached ? 0.0 : std::exp(double(n - level));
        }
    });
    const Summary s = summarize(hit);
    out.estimate = s.mean;
    out.se = s.se;
    const double hits = pairwise_sum(hit);
    out.mean_hit_time = hits > 0.0 ? pairwise_sum(hit_time) / hits : 0.0;
    out.truncation_bias_bound = pairwise_sum(residual) / double(n_paths);
    return out;
}

RecursionResidual first_passage_recursion_residual(const FirstPassageEstimate& lo,
                                                   const FirstPassageEstimate& mid,
                                                   const FirstPassageEstimate& hi) {
    const double r = hi.estimate - mid.estimate - (mid.estimate - lo.estimate) / kE;
    const double c_mid = 1.0 + 1.0 / kE;
    const double se = std::sqrt(hi.se * hi.se + c_mid * c_mid * mid.se * mid.se +
                                lo.se * lo.se / (kE * kE));
    return {r, se};
}

}  // namespace insider
