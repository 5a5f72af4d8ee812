#include "insider/kernels/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace insider {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

SeededStream::SeededStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), index_(stream_index) {
    // Decorrelate streams by mixing the seed and the index through two
    // SplitMix64 output functions before using the result as the state.
    state_ = mix(mix(seed + kGamma) + (stream_index + 1) * kGamma);
}

std::uint64_t SeededStream::next_u64() {
    state_ += kGamma;
    return mix(state_);
}

double SeededStream::uniform() {
    // 53-bit mantissa, shifted to the open interval.
    const double u = double(next_u64() >> 11) * 0x1.0p-53;
    return u == 0.0 ? 0x1.0p-54 : u;
}

double SeededStream::exponential(double rate) {
    if (!(rate > 0.0)) throw std::domain_error("exponential: rate must be > 0");
    return -std::log(uniform()) / rate;
}

double SeededStream::normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double theta = 6.283185307179586 * uniform();
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

std::vector<double> SeededStream::poisson_jump_times(double rate, double horizon) {
    if (!(horizon > 0.0)) throw std::domain_error("poisson_jump_times: horizon must be > 0");
    if (rate < 0.0) throw std::domain_error("poisson_jump_times: rate must be >= 0");
    std::vector<double> times;
    if (rate == 0.0) return times;
    double t = exponential(rate);
    while (t <= horizon) {
        times.push_back(t);
        t += exponential(rate);
    }
    return times;
}

}  // namespace insider
