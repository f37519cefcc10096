#ifndef AFCS_MODEL_HPP
#define AFCS_MODEL_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace afcs {

/// Thrown when a SystemConfig violates an invariant. The message names
/// the offending field.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// All physical and statistical parameters of one feedback link:
/// input-signal prior, feedback-noise level, transmitter amplitude,
/// forward-channel gain/noise/bandwidth, permitted clip probability,
/// and the per-sample cycle count.
struct SystemConfig {
    double x0 = 0.0;            // prior mean of input samples
    double sigma0_sq = 1.0;     // prior variance of input samples
    double sigma_v_sq = 0.0;    // feedback / modulator-input noise variance
    double a0 = 1.0;            // transmitter carrier amplitude
    double gamma = 1.0;         // forward-channel gain (demodulation constants absorbed)
    double n_zeta = 1.0;        // forward-channel noise spectral power density [power/Hz]
    double f0 = 1.0;            // forward-channel half-bandwidth [Hz]
    std::optional<double> f_base;  // input-signal baseband limit [Hz]; implies n_cycles = f0/f_base
    double mu = 0.01;           // permissible over-modulation probability, in (0, 0.5)
    int n_cycles = 1;           // cycles per sample transmission
};

/// Quantities derived from a validated SystemConfig and shared by the
/// modulator, estimator and analysis layers.
struct DerivedParams {
    double a;             // received amplitude a0 * gamma
    double sigma_zeta_sq; // forward noise variance n_zeta * f0
    double alpha;         // saturation factor for the configured mu
    double q_sq;          // receiver-output SNR, (a/alpha)^2 / sigma_zeta_sq
    double w_sign;        // received signal power, (a/alpha)^2
};

/// Per-cycle modulator adaptation state: transfer-function position and gain.
struct ModulatorState {
    double b_k;  // position (set to the receiver's current estimate)
    double m_k;  // gain, > 0
    int cycle;   // k >= 1
};

/// Receiver-side state: running estimate and its theoretical MMSE.
struct EstimatorState {
    double x_hat;  // current estimate
    double p_k;    // current MMSE, nonnegative
    int cycle;     // k >= 0
};

/// One operating point on the power-bandwidth plane.
struct EfficiencyPoint {
    double spectral_eff;  // delivered rate / f0 [bit/s/Hz]
    double ebit_over_n;   // energy per bit / noise spectral density
    double boundary_gap;  // ebit_over_n minus the Shannon boundary at spectral_eff
};

/// Checks every SystemConfig invariant and computes the derived constants.
/// Throws ValidationError naming the offending field on any violation.
DerivedParams validate(const SystemConfig& config);

}  // namespace afcs

#endif
