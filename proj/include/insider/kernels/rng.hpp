#pragma once

#include <cstdint>
#include <vector>

namespace insider {

// Per-path random stream built on SplitMix64 (Steele, Lea & Flood 2014;
// Vigna's fixed-increment variant). The state is derived from (seed, index)
// alone, so a stream's draw sequence is independent of when or on which
// thread it is consumed.
class SeededStream {
public:
    SeededStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();

    // Uniform on (0,1); never returns 0 or 1.
    double uniform();

    // rate > 0.
    double exponential(double rate);

    // Standard normal via Box-Muller (second variate cached).
    double normal();

    // Sorted jump times of a Poisson process with the given rate on
    // (0, horizon]: partial sums of i.i.d. exponentials, truncated.
    std::vector<double> poisson_jump_times(double rate, double horizon);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return index_; }

private:
    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint64_t state_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace insider
