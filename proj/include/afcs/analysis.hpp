#ifndef AFCS_ANALYSIS_HPP
#define AFCS_ANALYSIS_HPP

#include "afcs/model.hpp"

namespace afcs {

enum class Regime { PreThreshold, PostThreshold };

/// Rate summary for one cycle count n.
struct RateReport {
    int n;
    double n_star;      // threshold cycle count (may be +inf)
    double capacity;    // forward-channel capacity C [bit/s]
    double output_rate; // delivered system rate R_n [bit/s]
    Regime regime;      // PreThreshold iff n <= floor(n_star)
};

/// Cycle count at which MMSE decay switches from exponential to hyperbolic:
///   n* = log2(sigma0_sq / sigma_v_sq) / log2(1 + q_sq)
/// Returns +infinity when sigma_v_sq == 0 (decay never leaves the
/// exponential regime). Requires sigma0_sq > sigma_v_sq and q_sq > 0.
double threshold_cycles(double sigma0_sq, double sigma_v_sq, double q_sq);

/// Closed-form MMSE approximation:
///   k <= n*:  sigma0_sq * (1 + q_sq)^{-k}     (exponential regime)
///   k >  n*:  sigma_v_sq / (k - n* + 1)       (hyperbolic regime)
double mmse_closed_form(int k, double sigma0_sq, double sigma_v_sq,
                        double q_sq, double n_star);

/// Information delivered per cycle: 0.5 * log2(1 + q_sq) [bits].
double info_per_cycle(double q_sq);

/// Forward-channel capacity: f0 * log2(1 + q_sq) [bit/s].
double channel_capacity(double f0, double q_sq);

/// Mean system output bit-rate after n cycles:
///   R_n = (f0 / n) * log2(sigma0_sq / p_n)
/// p_n must lie in (0, sigma0_sq].
double output_bit_rate(int n, double f0, double sigma0_sq, double p_n);

/// Energy per delivered bit: w_sign / rate. rate must be positive.
double energy_per_bit(double w_sign, double rate);

/// Normalized energy per bit on the Shannon boundary at the given
/// spectral efficiency: (2^eta - 1) / eta. Tends to ln 2 as eta -> 0.
double shannon_boundary(double spectral_eff);

/// Operating point on the power-bandwidth plane for an n-cycle
/// transmission, computed from the exact MMSE recursion.
EfficiencyPoint efficiency_point(const DerivedParams& derived,
                                 double sigma0_sq, double sigma_v_sq, int n,
                                 double f0);

/// RateReport for one n, exact recursion throughout.
RateReport rate_report(const DerivedParams& derived, double sigma0_sq,
                       double sigma_v_sq, int n, double f0);

}  // namespace afcs

#endif
