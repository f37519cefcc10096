#ifndef AFCS_MONTECARLO_HPP
#define AFCS_MONTECARLO_HPP

#include <cstdint>
#include <vector>

#include "afcs/estimator.hpp"
#include "afcs/model.hpp"
#include "afcs/random.hpp"

namespace afcs {

/// One simulated sample transmission.
struct TrialRecord {
    double x_true;
    std::vector<double> estimates;   // x_hat_1 .. x_hat_n
    std::vector<double> sq_errors;   // (x - x_hat_k)^2, k = 1..n
    std::vector<bool> clip_flags;    // over-modulation per cycle
};

/// Aggregated ensemble statistics. Per-cycle vectors are indexed
/// k = 0..n, with k = 0 the prior-only estimate x_hat_0 = x0.
struct EnsembleStats {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int n = 0;
    std::vector<double> mean_sq_error;     // empirical MSE per cycle
    std::vector<double> stderr_sq_error;   // sample stddev / sqrt(trials)
    std::vector<double> mean_error;        // bias check, mean of (x - x_hat_k)
    double clip_rate = 0.0;                // clip events / (trials * n)
    double clip_rate_stddev = 0.0;         // binomial stddev at the observed rate
    std::uint64_t clip_events = 0;
    // Diagnostic: MSE over trials with no clip event anywhere.
    std::vector<double> mean_sq_error_unclipped;
    std::uint64_t unclipped_trials = 0;
};

/// Empirical-vs-theoretical verdict. Per-cycle tolerance is
/// |mse - P_k| <= 4 * stderr + clip_bias_allowance * P_k; the clip rate
/// must fall in the binomial 4-sigma band around mu.
struct ComparisonReport {
    std::vector<double> z_scores;          // (mse_k - P_k) / stderr_k
    std::vector<bool> cycle_pass;
    double max_abs_z = 0.0;
    double clip_rate = 0.0;
    double clip_band_halfwidth = 0.0;      // 4 sigma around mu
    bool clip_pass = false;
    bool mse_pass = false;
    bool pass = false;
};

/// Simulates one full sample transmission: clipping modulator, noisy
/// feedback of the position, AWGN forward channel, covariance-ratio
/// estimator with the open-loop gain schedule from the theoretical
/// MMSE trajectory.
TrialRecord run_trial(const SystemConfig& config, const DerivedParams& derived,
                      RandomStream& stream);

/// Runs `trials` independent transmissions and aggregates them.
/// Results are identical for any thread count (threads <= 0 picks the
/// hardware concurrency).
EnsembleStats run_ensemble(const SystemConfig& config, std::uint64_t trials,
                           std::uint64_t seed, int threads = 1);

/// Compares ensemble statistics against a theoretical trajectory.
/// Throws std::invalid_argument on a cycle-count mismatch.
ComparisonReport compare(const EnsembleStats& stats,
                         const MmseTrajectory& trajectory, double mu);

}  // namespace afcs

#endif
