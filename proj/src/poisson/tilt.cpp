#include "insider/poisson/tilt.hpp"

#include <cmath>
#include <stdexcept>

namespace insider {

namespace {
constexpr double kE = 2.718281828459045;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TiltControls TiltControls::constant(double alpha1) { return TiltControls{alpha1, alpha1, {}}; }

TiltControls TiltControls::regime_switch(double high, double low, int level) {
    return TiltControls{high, low, level};
}

void TiltControls::validate() const {
    if (!(alpha_low > 0.0) || !(alpha_high >= alpha_low))
        throw std::domain_error("TiltControls: need alpha_high >= alpha_low > 0");
}

TiltedPath simulate_tilted_path(const MarketParams& params, const TiltControls& controls,
                                SeededStream& stream) {
    controls.validate();
    const double T = params.horizon;
    std::vector<double> j1, j2;
    int n = 0;
    bool switched = controls.switch_level && *controls.switch_level == 0;
    double switch_time = switched ? 0.0 : kInf;
    double t = 0.0;
    double log_weight = 0.0;

    // Dominating rates track the current regime; candidate clocks are redrawn
    // after a regime switch (memorylessness keeps the law exact).
    double env1 = controls.alpha1_at(switched);
    double cand1 = stream.exponential(env1);
    double cand2 = stream.exponential(kE * env1);
    while (true) {
        const bool first = cand1 <= cand2;
        const double s = first ? cand1 : cand2;
        if (s > T) break;
        const double a1 = controls.alpha1_at(switched);  // intensity at s-
        const double env = first ? env1 : kE * env1;
        const double rate = first ? a1 : kE * a1;
        bool accept = true;
        if (rate < env) accept = stream.uniform() * env <= rate;
        if (accept) {
            if (first) {
                j1.push_back(s);
                ++n;
                log_weight += std::log(a1);
            } else {
                j2.push_back(s);
                --n;
                log_weight += std::log(kE * a1);
            }
            if (!switched && controls.switch_level && n == *controls.switch_level) {
                switched = true;
                switch_time = s;
                // Integral of (alpha1 + e*alpha1 - 2) over the high regime.
                log_weight -= ((1.0 + kE) * controls.alpha_high - 2.0) * s;
                const double new_env = controls.alpha_low;
                env1 = new_env;
                cand1 = s + stream.exponential(new_env);
                cand2 = s + stream.exponential(kE * new_env);
                continue;
            }
        }
        if (first)
            cand1 = s + stream.exponential(env1);
        else
            cand2 = s + stream.exponential(kE * env1);
    }
    const double tail_from = std::min(switch_time, T);
    const double a_before = controls.alpha1_at(false);
    const double a_after = controls.alpha1_at(true);
    if (switch_time > T) {
        log_weight -= ((1.0 + kE) * a_before - 2.0) * T;
    } else {
        // High-regime part was folded in at the switch.
        log_weight -= ((1.0 + kE) * a_after - 2.0) * (T - tail_from);
    }
    return TiltedPath{JumpPath(std::move(j1), std::move(j2), T), switch_time, log_weight};
}

double level_hit_time(const JumpPath& path, int level) {
    if (level == 0) return 0.0;
    int n = 0;
    for (const auto& [t, is_first] : path.merged_jumps()) {
        n += is_first ? 1 : -1;
        if (n == level) return t;
    }
    return kInf;
}

double tilt_log_density(const MarketParams& params, const TiltControls& controls,
                        const JumpPath& path) {
    controls.validate();
    if (params.intensity1 != 1.0 || params.intensity2 != 1.0)
        throw std::domain_error("tilt_log_density: reference market must have unit intensities");
    const double T = params.horizon;
    const double tau = controls.switch_level ? level_hit_time(path, *controls.switch_level) : kInf;
    double lw = 0.0;
    for (const auto& [t, is_first] : path.merged_jumps()) {
        const double a1 = t <= tau ? controls.alpha_high : controls.alpha_low;
        lw += std::log(is_first ? a1 : kE * a1);
    }
    const double t_high = std::min(tau, T);
    lw -= ((1.0 + kE) * controls.alpha_high - 2.0) * t_high;
    if (t_high < T) lw -= ((1.0 + kE) * controls.alpha_low - 2.0) * (T - t_high);
    return lw;
}

}  // namespace insider
