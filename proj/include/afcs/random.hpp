#ifndef AFCS_RANDOM_HPP
#define AFCS_RANDOM_HPP

#include <cstdint>

namespace afcs {

/// Deterministic per-trial random stream.
///
/// Generator: splitmix64. Per-trial substreams are derived from the
/// 64-bit master seed by finalizing seed XOR mix64(trial_index + 1), so
/// trial order and parallel scheduling cannot change any draw. Gaussian
/// variates come from a one-value Box-Muller transform (two fresh
/// uniforms per variate, cosine branch). This contract is what makes
/// ensemble output reproducible from (config, seed, trials) alone.
class RandomStream {
public:
    static RandomStream for_trial(std::uint64_t seed, std::uint64_t trial_index);

    explicit RandomStream(std::uint64_t state) : state_(state) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1).
    double next_uniform();

    /// Standard normal variate.
    double next_gaussian();

private:
    std::uint64_t state_;
};

}  // namespace afcs

#endif
