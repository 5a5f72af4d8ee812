#include "insider/utility/dual_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "insider/kernels/parallel.hpp"
#include "insider/kernels/quadrature.hpp"
#include "insider/kernels/skellam.hpp"
#include "insider/poisson/intensity.hpp"
#include "insider/utility/log_utility.hpp"

namespace insider {

namespace {

constexpr double kE = 2.718281828459045;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

// Integral of f(lambda1(t), lambda2(t)) over the path's horizon, segment by
// segment between jumps. The last segment reaches the horizon where the
// intensities degenerate, so it gets the singular-endpoint treatment.
template <class F>
double pathwise_intensity_integral(const MarketParams& params, const JumpPath& path, F&& f,
                                   double abs_tol) {
    const double T = params.horizon;
    const int n_T = path.terminal_diff();
    const auto jumps = path.merged_jumps();
    double total = 0.0;
    double a = 0.0;
    int n = 0;
    auto add_segment = [&](double lo, double hi, int n_seg, bool at_horizon) {
        if (hi <= lo) return;
        const double tol = std::max(abs_tol * (hi - lo) / T, abs_tol * 1e-3);
        auto integrand = [&](double t) {
            const auto l = insider_intensities(params, t, n_seg, n_T);
            return f(l.lambda1, l.lambda2);
        };
        total += adaptive_integral(integrand, lo, hi, tol, at_horizon);
    };
    for (const auto& [t, is_first] : jumps) {
        add_segment(a, t, n, false);
        n += is_first ? 1 : -1;
        a = t;
    }
    add_segment(a, T, n, true);
    return total;
}

}  // namespace

double dual_integrand(double lambda1, double lambda2) {
    const double s = lambda1 + lambda2;
    return xlogx(s) - s * std::log(kE + 1.0) - lambda1 + 2.0;
}

double entropy_integrand(double lambda1, double lambda2) {
    return xlogx(lambda1) + xlogx(lambda2) - lambda1 - lambda2 + 2.0;
}

double pathwise_dual_integral(const MarketParams& params, const JumpPath& path, double abs_tol) {
    return pathwise_intensity_integral(params, path, dual_integrand, abs_tol);
}

double pathwise_entropy_integral(const MarketParams& params, const JumpPath& path, double abs_tol) {
    return pathwise_intensity_integral(params, path, entropy_integrand, abs_tol);
}

namespace {

struct BucketAccum {
    std::map<int, std::vector<double>> values;
};

}  // namespace

EntropyIdentityResult entropy_identity_check(const MarketParams& params, std::size_t n_paths,
                                             std::uint64_t seed, int x_min, int x_max,
                                             std::size_t min_bucket, int threads) {
    std::vector<double> integral(n_paths);
    std::vector<int> terminal(n_paths);
    parallel_for_blocks(n_paths, 1024, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            const JumpPath path = simulate_path(params, stream);
            integral[i] = pathwise_entropy_integral(params, path);
            terminal[i] = path.terminal_diff();
        }
    });

    const SkellamParams sk{params.intensity1 * params.horizon, params.intensity2 * params.horizon};
    EntropyIdentityResult out;
    for (int x = x_min; x <= x_max; ++x) {
        std::vector<double> vals;
        for (std::size_t i = 0; i < n_paths; ++i)
            if (terminal[i] == x) vals.push_back(integral[i]);
        if (vals.empty() || vals.size() < min_bucket) continue;  // bucket skipped
        const Summary s = summarize(vals);
        const double target = -skellam_log_pmf(x, sk);
        out.buckets.push_back(
            {x, vals.size(), s.mean, s.se, target, std::abs(s.mean - target) <= 3.0 * s.se});
    }
    out.aggregate = summarize(integral);
    out.entropy_target = skellam_entropy(sk).value;
    out.aggregate_pass = std::abs(out.aggregate.mean - out.entropy_target) <= 3.0 * out.aggregate.se;
    return out;
}

DualIntegralEstimate dual_integral_estimate(const MarketParams& params, std::size_t n_paths,
                                            std::uint64_t seed, int threads) {
    std::vector<double> integral(n_paths);
    std::vector<int> terminal(n_paths);
    parallel_for_blocks(n_paths, 1024, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            const JumpPath path = simulate_path(params, stream);
            integral[i] = pathwise_dual_integral(params, path);
            terminal[i] = path.terminal_diff();
        }
    });
    DualIntegralEstimate out;
    out.aggregate = summarize(integral);
    std::map<int, std::vector<double>> buckets;
    for (std::size_t i = 0; i < n_paths; ++i) buckets[terminal[i]].push_back(integral[i]);
    for (auto& [x, vals] : buckets) {
        out.by_bucket[x] = summarize(vals);
        out.bucket_counts[x] = vals.size();
    }
    return out;
}

double public_log_utility(const MarketParams& params) {
    if (params.intensity1 != 1.0 || params.intensity2 != 1.0)
        throw std::domain_error("public_log_utility: closed form requires unit intensities");
    // Optimal fraction 1/2; growth rate log((1+e)/2) + log((1+1/e)/2).
    const double rate = std::log((1.0 + kE) / 2.0) + std::log((1.0 + 1.0 / kE) / 2.0);
    return params.horizon * rate;
}

InsiderUtilityReport insider_log_utility_report(const MarketParams& params, std::size_t n_paths,
                                                std::uint64_t seed, double epsilon, int threads,
                                                const std::vector<double>& sweep_epsilons) {
    std::vector<double> epsilons = sweep_epsilons;
    if (std::find(epsilons.begin(), epsilons.end(), epsilon) == epsilons.end())
        epsilons.push_back(epsilon);

    const std::size_t n_eps = epsilons.size();
    std::vector<std::vector<double>> log_v(n_eps, std::vector<double>(n_paths));
    std::vector<double> dual(n_paths);
    parallel_for_blocks(n_paths, 1024, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            const JumpPath path = simulate_path(params, stream);
            dual[i] = pathwise_dual_integral(params, path);
            for (std::size_t k = 0; k < n_eps; ++k)
                log_v[k][i] = simulate_log_wealth(params, path, {epsilons[k]}).log_wealth;
        }
    });

    const SkellamParams sk{params.intensity1 * params.horizon, params.intensity2 * params.horizon};
    const double entropy = skellam_entropy(sk).value;

    InsiderUtilityReport out;
    out.n_paths = n_paths;
    out.epsilon = epsilon;
    out.dual_integral = summarize(dual);
    out.entropy = entropy;
    out.dual_bound = entropy - out.dual_integral.mean;

    auto gap_for = [&](const std::vector<double>& lv) {
        // gap_i = log V_i + dual_i - H, paired for variance reduction.
        std::vector<double> g(n_paths);
        for (std::size_t i = 0; i < n_paths; ++i) g[i] = lv[i] + dual[i] - entropy;
        return summarize(g);
    };

    for (std::size_t k = 0; k < n_eps; ++k) {
        const Summary lw = summarize(log_v[k]);
        const Summary gap = gap_for(log_v[k]);
        const bool pass = std::abs(gap.mean) <= 3.0 * gap.se;
        out.epsilon_rows.push_back({epsilons[k], lw.mean, lw.se, gap.mean, gap.se, pass});
        if (epsilons[k] == epsilon) {
            out.log_wealth = lw;
            out.gap_mean = gap.mean;
            out.gap_se = gap.se;
            out.pass = pass;
        }
    }
    out.public_log_utility = public_log_utility(params);
    out.additional_utility = out.log_wealth.mean - out.public_log_utility;
    return out;
}

}  // namespace insider
