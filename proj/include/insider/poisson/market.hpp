#pragma once

#include <string>
#include <vector>

#include "insider/kernels/rng.hpp"

namespace insider {

struct MarketParams {
    double horizon = 1.0;
    double intensity1 = 1.0;
    double intensity2 = 1.0;
};

// State of both counting processes at one time point. The asset price is
// S_t = exp(N1_t - N2_t).
struct MarketState {
    int n1;
    int n2;
    int n;  // n1 - n2
    double s;
};

// Sorted jump times of the two counting processes on (0, horizon]. Counts are
// right-continuous: a jump at exactly t belongs to N_t.
class JumpPath {
public:
    JumpPath(std::vector<double> jumps1, std::vector<double> jumps2, double horizon);

    const std::vector<double>& jumps1() const { return jumps1_; }
    const std::vector<double>& jumps2() const { return jumps2_; }
    double horizon() const { return horizon_; }

    int count1(double t) const;
    int count2(double t) const;
    int diff(double t) const { return count1(t) - count2(t); }
    int terminal_diff() const { return int(jumps1_.size()) - int(jumps2_.size()); }

    MarketState state(double t) const;

    // All jump times of either process, merged in increasing order.
    // .second is true for a jump of the first process.
    std::vector<std::pair<double, bool>> merged_jumps() const;

    // Line format "T; t1,t2,...; s1,s2,..." used by golden-path fixtures.
    std::string serialize() const;
    static JumpPath parse(const std::string& line);

private:
    std::vector<double> jumps1_;
    std::vector<double> jumps2_;
    double horizon_;
};

JumpPath simulate_path(const MarketParams& params, SeededStream& stream);

}  // namespace insider
