#ifndef AFCS_COMMANDS_HPP
#define AFCS_COMMANDS_HPP

#include <cstdint>

#include "afcs/montecarlo.hpp"
#include "afcs/table.hpp"

namespace afcs {

inline constexpr const char* kToolVersion = "afcs 1.0.0";

/// Theoretical MMSE table: one row per cycle 0..n with the exact
/// recursion, the closed-form approximation, and the decay regime.
OutputTable cmd_theory(const SystemConfig& config);

/// Monte Carlo vs. theory table; the comparison verdict is returned
/// through `report` for --check handling.
OutputTable cmd_simulate(const SystemConfig& config, std::uint64_t trials,
                         std::uint64_t seed, int threads,
                         ComparisonReport& report);

/// Output bit-rate sweep over n in [n_lo, n_hi].
OutputTable cmd_sweep(const SystemConfig& config, int n_lo, int n_hi);

/// Power-bandwidth efficiency sweep over n in [n_lo, n_hi].
OutputTable cmd_efficiency(const SystemConfig& config, int n_lo, int n_hi);

}  // namespace afcs

#endif
