#include "insider/contg/probe.hpp"

#include <cmath>
#include <stdexcept>

#include "insider/kernels/parallel.hpp"
#include "insider/kernels/skellam.hpp"
#include "insider/kernels/stats.hpp"

namespace insider {

namespace {

ProbeRow finish_row(double a, double eps, double prob, const std::vector<Summary>& member_stats,
                    double c_candidate) {
    ProbeRow row;
    row.a = a;
    row.eps = eps;
    row.prob = prob;
    if (!(prob > 0.0)) {
        row.skipped = true;
        return row;
    }
    for (std::size_t j = 0; j < member_stats.size(); ++j) {
        if (row.best_member < 0 || member_stats[j].mean > row.best_lhs) {
            row.best_lhs = member_stats[j].mean;
            row.best_se = member_stats[j].se;
            row.best_member = int(j);
        }
    }
    row.rhs = -prob * std::log(prob) - c_candidate * prob;
    row.holds = row.best_lhs >= row.rhs;
    row.implied_c = (-prob * std::log(prob) - row.best_lhs) / prob;
    return row;
}

ProbeResult finish_result(std::vector<ProbeRow> rows, double c_candidate) {
    ProbeResult out;
    out.rows = std::move(rows);
    out.candidate_c = c_candidate;
    out.all_hold = true;
    bool any = false;
    for (const auto& r : out.rows) {
        if (r.skipped) continue;
        any = true;
        out.all_hold = out.all_hold && r.holds;
        out.implied_c = std::max(out.implied_c, r.implied_c);
    }
    if (!any) out.all_hold = false;
    return out;
}

}  // namespace

ProbeResult nupbr_probe_poisson(const MarketParams& params, const std::vector<TiltControls>& family,
                                const std::vector<std::pair<double, double>>& grid,
                                double c_candidate, std::size_t n_paths, std::uint64_t seed,
                                int threads) {
    if (family.empty()) throw std::domain_error("nupbr_probe_poisson: empty family");
    const SkellamParams sk{params.intensity1 * params.horizon, params.intensity2 * params.horizon};

    // One pass: terminal values and each member's log-density per path.
    const std::size_t m = family.size();
    std::vector<int> terminal(n_paths);
    std::vector<double> logz(n_paths * m);
    parallel_for_blocks(n_paths, 1024, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            const JumpPath path = simulate_path(params, stream);
            terminal[i] = path.terminal_diff();
            for (std::size_t j = 0; j < m; ++j)
                logz[i * m + j] = tilt_log_density(params, family[j], path);
        }
    });

    std::vector<ProbeRow> rows;
    for (const auto& [a, eps] : grid) {
        double prob = 0.0;
        for (int x = int(std::ceil(a + 1e-12)); x < a + eps - 1e-12; ++x)
            prob += skellam_pmf(x, sk);
        std::vector<Summary> stats(m);
        if (prob > 0.0) {
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<double> vals(n_paths);
                for (std::size_t i = 0; i < n_paths; ++i) {
                    const double g = double(terminal[i]);
                    const bool in = g > a && g < a + eps;
                    vals[i] = in ? logz[i * m + j] : 0.0;
                }
                stats[j] = summarize(vals);
            }
        }
        rows.push_back(finish_row(a, eps, prob, stats, c_candidate));
    }
    return finish_result(std::move(rows), c_candidate);
}

ProbeResult nupbr_probe_theta(const ThetaMarket& market,
                              const std::vector<PiecewiseControl>& family,
                              const std::vector<std::pair<double, double>>& grid,
                              double c_candidate, std::size_t n_paths, std::uint64_t seed,
                              int threads) {
    if (family.empty()) throw std::domain_error("nupbr_probe_theta: empty family");
    const std::size_t m = family.size();
    std::vector<double> terminal(n_paths);
    std::vector<double> logz(n_paths * m);
    parallel_for_blocks(n_paths, 1024, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            const auto j1 = stream.poisson_jump_times(1.0, market.horizon);
            const auto j2 = stream.poisson_jump_times(1.0, market.horizon);
            terminal[i] = theta_terminal_price(market, j1, j2);
            for (std::size_t j = 0; j < m; ++j)
                logz[i * m + j] = theta_log_density(market, family[j], j1, j2);
        }
    });

    std::vector<ProbeRow> rows;
    for (const auto& [a, eps] : grid) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n_paths; ++i)
            if (terminal[i] > a && terminal[i] < a + eps) ++hits;
        const double prob = double(hits) / double(n_paths);
        std::vector<Summary> stats(m);
        if (prob > 0.0) {
            for (std::size_t j = 0; j < m; ++j) {
                std::vector<double> vals(n_paths);
                for (std::size_t i = 0; i < n_paths; ++i) {
                    const bool in = terminal[i] > a && terminal[i] < a + eps;
                    vals[i] = in ? logz[i * m + j] : 0.0;
                }
                stats[j] = summarize(vals);
            }
        }
        rows.push_back(finish_row(a, eps, prob, stats, c_candidate));
    }
    return finish_result(std::move(rows), c_candidate);
}

}  // namespace insider
