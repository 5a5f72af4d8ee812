#include "insider/utility/log_utility.hpp"

#include <cmath>
#include <stdexcept>

namespace insider {

namespace {
constexpr double kE = 2.718281828459045;
constexpr double kEm1 = kE - 1.0;            // e - 1
constexpr double kEinvM1 = 1.0 / kE - 1.0;   // 1/e - 1
const double kDen = kEm1 * (1.0 - 1.0 / kE); // (e-1)(1-1/e)

struct Segment {
    double a;
    double b;
    int n;        // N1 - N2 on [a, b)
    bool ends_at_jump;
    bool jump_is_first;  // process of the jump at b (when ends_at_jump)
};

template <class Fn>
void for_each_segment(const JumpPath& path, Fn&& fn) {
    const auto jumps = path.merged_jumps();
    double a = 0.0;
    int n = 0;
    for (const auto& [t, is_first] : jumps) {
        if (!fn(Segment{a, t, n, true, is_first})) return;
        n += is_first ? 1 : -1;
        a = t;
    }
    fn(Segment{a, path.horizon(), n, false, false});
}

}  // namespace

double pi_lower_bound() { return -1.0 / kEm1; }
double pi_upper_bound() { return 1.0 / (1.0 - 1.0 / kE); }

OptimalFraction optimal_fraction(double lambda1, double lambda2) {
    if (lambda1 < 0.0 || lambda2 < 0.0)
        throw std::domain_error("optimal_fraction: intensities must be >= 0");
    const double total = lambda1 + lambda2;
    if (total <= 0.0) throw std::domain_error("optimal_fraction: lambda1 + lambda2 must be > 0");
    const double pi = (lambda1 * kEm1 + lambda2 * kEinvM1) / (kDen * total);
    return {pi, lambda1 == 0.0 || lambda2 == 0.0};
}

double epsilon_stopping_time(const MarketParams& params, const JumpPath& path, double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::domain_error("epsilon_stopping_time: epsilon must lie in (0,1)");
    const double T = params.horizon;
    const double hi = 1.0 / epsilon;
    const int n_T = path.terminal_diff();
    const double t_last = T * (1.0 - 1e-12);  // left-limit sample near the horizon

    auto lambdas = [&](double t, int n) { return insider_intensities(params, t, n, n_T); };
    auto outside = [&](const InsiderIntensityPair& l) {
        return l.lambda1 <= epsilon || l.lambda1 >= hi || l.lambda2 <= epsilon || l.lambda2 >= hi;
    };

    double tau = T;
    for_each_segment(path, [&](const Segment& seg) {
        const double b_eval = seg.ends_at_jump ? seg.b : std::min(seg.b, t_last);
        if (b_eval <= seg.a) return false;
        const auto la = lambdas(seg.a, seg.n);
        if (outside(la)) {
            tau = seg.a;
            return false;
        }
        const auto lb = lambdas(b_eval, seg.n);
        if (!outside(lb)) return true;  // monotone on the segment: no exit here
        // Bisect the first boundary crossing.
        double lo = seg.a, up = b_eval;
        for (int i = 0; i < 80 && up - lo > 1e-14 * T; ++i) {
            const double mid = 0.5 * (lo + up);
            if (outside(lambdas(mid, seg.n)))
                up = mid;
            else
                lo = mid;
        }
        tau = up;
        return false;
    });
    return std::min(tau, T);
}

LogWealthResult simulate_log_wealth(const MarketParams& params, const JumpPath& path,
                                    EpsilonStopping stopping) {
    const double T = params.horizon;
    const double tau = epsilon_stopping_time(params, path, stopping.epsilon);
    const int n_T = path.terminal_diff();
    const double t_cap = T * (1.0 - 1e-12);

    double log_v = 0.0;
    int used = 0;
    int n = 0;
    for (const auto& [t, is_first] : path.merged_jumps()) {
        if (t > tau) break;
        const auto l = insider_intensities(params, std::min(t, t_cap), n, n_T);
        const double pi = optimal_fraction(l.lambda1, l.lambda2).value;
        const double factor = 1.0 + (is_first ? kEm1 : kEinvM1) * pi;
        if (!(factor > 0.0))
            throw std::runtime_error("simulate_log_wealth: admissibility violated (factor <= 0)");
        log_v += std::log(factor);
        ++used;
        n += is_first ? 1 : -1;
    }
    return {log_v, tau, used};
}

}  // namespace insider
