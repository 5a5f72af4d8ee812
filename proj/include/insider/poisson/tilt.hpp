#pragma once

#include <limits>
#include <optional>

#include "insider/poisson/market.hpp"

namespace insider {

// Candidate martingale-density controls for the unit-intensity market:
// N1 runs at alpha1, N2 at e * alpha1 (the martingale constraint for
// S = exp(N1 - N2)). alpha1 equals `alpha_high` until N1 - N2 first hits
// `switch_level`, and `alpha_low` afterwards; a constant control has no
// switch level.
struct TiltControls {
    double alpha_high;
    double alpha_low;
    std::optional<int> switch_level;

    static TiltControls constant(double alpha1);
    static TiltControls regime_switch(double high, double low, int level);

    // The family enforces alpha2 = e * alpha1, so alpha1 = alpha2 = 1 (the
    // density Z identically 1) is not representable.
    static constexpr bool identity_feasible() { return false; }

    double alpha1_at(bool switched) const { return switched ? alpha_low : alpha_high; }
    void validate() const;
};

struct TiltedPath {
    JumpPath path;
    double switch_time;  // +inf when the level is never hit (or absent)
    double log_weight;   // log of the tilt density d(tilted)/d(reference) at T
};

// Simulates the two counting processes at rates (alpha1, e*alpha1) by Poisson
// thinning against the regime's dominating rates.
TiltedPath simulate_tilted_path(const MarketParams& params, const TiltControls& controls,
                                SeededStream& stream);

// First time N1 - N2 equals `level` along the path; +inf if never, 0 if
// level == 0.
double level_hit_time(const JumpPath& path, int level);

// log Z_T of the control's density evaluated along a reference-measure path
// (unit intensities required).
double tilt_log_density(const MarketParams& params, const TiltControls& controls,
                        const JumpPath& path);

}  // namespace insider
