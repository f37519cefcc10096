#include "afcs/random.hpp"

#include <cmath>

namespace afcs {

namespace {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

RandomStream RandomStream::for_trial(std::uint64_t seed, std::uint64_t trial_index) {
    return RandomStream(mix64(seed ^ mix64((trial_index + 1) * kGolden)));
}

std::uint64_t RandomStream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double RandomStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_gaussian() {
    // Box-Muller, cosine branch only; u1 shifted into (0, 1].
    const double u1 = 1.0 - next_uniform();
    const double u2 = next_uniform();
    static const double two_pi = 2.0 * std::acos(-1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

}  // namespace afcs
