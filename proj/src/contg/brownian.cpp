#include "insider/contg/brownian.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "insider/kernels/gaussian.hpp"
#include "insider/kernels/parallel.hpp"
#include "insider/kernels/quadrature.hpp"
#include "insider/kernels/rng.hpp"

namespace insider {

namespace {

// Phi(b) - Phi(a) for a <= b, stable in both tails.
double phi_diff(double a, double b) {
    constexpr double kS = 1.4142135623730951;
    if (a > 0.0) return 0.5 * (std::erfc(a / kS) - std::erfc(b / kS));
    if (b < 0.0) return 0.5 * (std::erfc(-b / kS) - std::erfc(-a / kS));
    return norm_cdf(b) - norm_cdf(a);
}

// Build the time grid: uniform n_steps over [0, T], plus geometric halving of
// the final uniform step range when the cutoff lies below 8 grid steps.
// Returns grid times and the index of the cutoff node T - delta_eff.
struct Grid {
    std::vector<double> times;
    std::size_t cut_index;
    double delta_eff;
};

Grid build_grid(double T, std::size_t n_steps, double delta) {
    const double dt = T / double(n_steps);
    if (delta < 0.0) delta = 8.0 * dt;
    if (delta < 1e-13 * T)
        throw std::domain_error("bs_insider_experiment: delta cutoff too small for the grid");
    Grid g;
    if (delta >= 8.0 * dt) {
        const std::size_t k_cut = std::size_t(std::floor((T - delta) / dt + 1e-12));
        for (std::size_t k = 0; k <= n_steps; ++k) g.times.push_back(dt * double(k));
        g.cut_index = k_cut;
        g.delta_eff = T - dt * double(k_cut);
        return g;
    }
    const double coarse_end = T - 8.0 * dt;
    const std::size_t k_coarse = std::size_t(std::llround(coarse_end / dt));
    for (std::size_t k = 0; k <= k_coarse; ++k) g.times.push_back(dt * double(k));
    double h = 8.0 * dt;
    while (h / 2.0 > delta) {
        // Four substeps across [T-h, T-h/2].
        const double lo = T - h, hi = T - h / 2.0;
        for (int j = 1; j <= 4; ++j) g.times.push_back(lo + (hi - lo) * double(j) / 4.0);
        h /= 2.0;
    }
    const double lo = T - h, hi = T - delta;
    for (int j = 1; j <= 4; ++j) g.times.push_back(lo + (hi - lo) * double(j) / 4.0);
    g.cut_index = g.times.size() - 1;
    g.delta_eff = delta;
    // One extra leg to the horizon so W_T is simulated.
    g.times.push_back(T);
    return g;
}

}  // namespace

double cell_density(double a, double b, double cell_prob, double t_rem, double w) {
    if (!(t_rem > 0.0)) throw std::domain_error("cell_density: need t_rem > 0");
    if (!(cell_prob > 0.0)) throw std::domain_error("cell_density: need cell_prob > 0");
    const double s = std::sqrt(t_rem);
    return phi_diff((a - w) / s, (b - w) / s) / cell_prob;
}

double information_drift(double a, double b, double t_rem, double w) {
    if (!(t_rem > 0.0)) throw std::domain_error("information_drift: need t_rem > 0");
    const double s = std::sqrt(t_rem);
    const double ap = (a - w) / s;
    const double bp = (b - w) / s;
    // Far outside the cell the conditional drift approaches pull-to-edge.
    if (ap > 30.0) return ap / s;
    if (bp < -30.0) return bp / s;
    const double den = s * phi_diff(ap, bp);
    const double num = norm_pdf(ap) - norm_pdf(bp);
    return num / den;
}

double expected_remaining_entropy(const BrownianMarket& market, const PartitionSpec& cells,
                                  double delta) {
    if (delta <= 0.0) return 0.0;
    const double T = market.horizon;
    if (!(delta < T)) throw std::domain_error("expected_remaining_entropy: need delta < horizon");
    const double sw = std::sqrt(T - delta);
    const double sd = std::sqrt(delta);
    auto cond_entropy = [&](double w) {
        double h = 0.0;
        for (int i = 0; i < cells.cells(); ++i) {
            const double q = phi_diff((cells.edges[std::size_t(i)] - w) / sd,
                                      (cells.edges[std::size_t(i) + 1] - w) / sd);
            if (q > 0.0) h -= q * std::log(q);
        }
        return h;
    };
    auto integrand = [&](double w) { return norm_pdf(w / sw) / sw * cond_entropy(w); };
    const double L = 10.0 * sw;
    return adaptive_integral(integrand, -L, L, 1e-10);
}

BsExperimentResult bs_insider_experiment(const BrownianMarket& market, const PartitionSpec& cells,
                                         std::size_t n_paths, std::size_t n_steps,
                                         std::uint64_t seed, double delta, int threads) {
    if (n_steps < 16) throw std::domain_error("bs_insider_experiment: need n_steps >= 16");
    cells.validate();
    if (std::isfinite(cells.edges.front()) || std::isfinite(cells.edges.back()))
        throw std::domain_error("bs_insider_experiment: cells must cover the whole real line");
    const double T = market.horizon;
    const Grid grid = build_grid(T, n_steps, delta);
    const std::size_t n_nodes = grid.times.size();

    std::vector<double> values(n_paths);
    parallel_for_blocks(n_paths, 256, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> w(n_nodes);
        for (std::size_t i = begin; i < end; ++i) {
            SeededStream stream(seed, i);
            w[0] = 0.0;
            for (std::size_t k = 1; k < n_nodes; ++k) {
                const double dt = grid.times[k] - grid.times[k - 1];
                w[k] = w[k - 1] + std::sqrt(dt) * stream.normal();
            }
            const int cell = cells.locate(w[n_nodes - 1]);
            const double a = cells.edges[std::size_t(cell)];
            const double b = cells.edges[std::size_t(cell) + 1];
            // Trapezoid of drift^2 up to the cutoff node.
            double prev = information_drift(a, b, T - grid.times[0], w[0]);
            double acc = 0.0;
            for (std::size_t k = 1; k <= grid.cut_index; ++k) {
                const double cur = information_drift(a, b, T - grid.times[k], w[k]);
                acc += 0.5 * (prev * prev + cur * cur) * (grid.times[k] - grid.times[k - 1]);
                prev = cur;
            }
            values[i] = 0.5 * acc;
        }
    });

    BsExperimentResult out;
    out.value = summarize(values);
    out.target_entropy = cells.entropy();
    out.tail_correction = expected_remaining_entropy(market, cells, grid.delta_eff);
    out.target = out.target_entropy - out.tail_correction;
    out.gap = out.value.mean - out.target;
    out.allowance = 0.05 * std::max(1.0, out.target_entropy);
    out.pass = std::abs(out.gap) <= 3.0 * out.value.se + out.allowance;
    out.delta = grid.delta_eff;
    out.n_steps = n_steps;
    return out;
}

}  // namespace insider
