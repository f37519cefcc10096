#include "afcs/analysis.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "afcs/estimator.hpp"

namespace afcs {

double threshold_cycles(double sigma0_sq, double sigma_v_sq, double q_sq) {
    if (!(sigma0_sq > 0.0))
        throw std::domain_error("threshold_cycles: sigma0_sq must be > 0");
    if (!(q_sq > 0.0)) throw std::domain_error("threshold_cycles: q_sq must be > 0");
    if (sigma_v_sq == 0.0) return std::numeric_limits<double>::infinity();
    if (!(sigma0_sq > sigma_v_sq))
        throw std::domain_error(
            "threshold_cycles: requires sigma0_sq > sigma_v_sq");
    return std::log2(sigma0_sq / sigma_v_sq) / std::log2(1.0 + q_sq);
}

double mmse_closed_form(int k, double sigma0_sq, double sigma_v_sq,
                        double q_sq, double n_star) {
    if (static_cast<double>(k) <= n_star)
        return sigma0_sq * std::pow(1.0 + q_sq, -static_cast<double>(k));
    return sigma_v_sq / (static_cast<double>(k) - n_star + 1.0);
}

double info_per_cycle(double q_sq) {
    if (!(q_sq >= 0.0)) throw std::domain_error("info_per_cycle: q_sq must be >= 0");
    return 0.5 * std::log2(1.0 + q_sq);
}

double channel_capacity(double f0, double q_sq) {
    if (!(f0 > 0.0)) throw std::domain_error("channel_capacity: f0 must be > 0");
    return f0 * std::log2(1.0 + q_sq);
}

double output_bit_rate(int n, double f0, double sigma0_sq, double p_n) {
    if (n <= 0) throw std::domain_error("output_bit_rate: n must be positive");
    if (!(p_n > 0.0 && p_n <= sigma0_sq))
        throw std::domain_error("output_bit_rate: p_n must lie in (0, sigma0_sq]");
    return (f0 / static_cast<double>(n)) * std::log2(sigma0_sq / p_n);
}

double energy_per_bit(double w_sign, double rate) {
    if (!(w_sign > 0.0)) throw std::domain_error("energy_per_bit: w_sign must be > 0");
    if (!(rate > 0.0)) throw std::domain_error("energy_per_bit: rate must be > 0");
    return w_sign / rate;
}

double shannon_boundary(double spectral_eff) {
    if (!(spectral_eff > 0.0))
        throw std::domain_error("shannon_boundary: spectral_eff must be > 0");
    // Limit for spectral_eff -> 0 is ln 2 (~0.6931, the -1.59 dB floor).
    return (std::exp2(spectral_eff) - 1.0) / spectral_eff;
}

EfficiencyPoint efficiency_point(const DerivedParams& derived,
                                 double sigma0_sq, double sigma_v_sq, int n,
                                 double f0) {
    const MmseTrajectory traj = mmse_trajectory(derived, sigma0_sq, sigma_v_sq, n);
    const double rate = output_bit_rate(n, f0, sigma0_sq, traj.p.back());
    const double spectral = rate / f0;
    // Noise spectral density is sigma_zeta_sq / f0, so
    // E_bit / N = w_sign / (rate * n_zeta) = q_sq * f0 / rate.
    const double ebit_over_n = derived.q_sq * f0 / rate;
    return EfficiencyPoint{spectral, ebit_over_n,
                           ebit_over_n - shannon_boundary(spectral)};
}

RateReport rate_report(const DerivedParams& derived, double sigma0_sq,
                       double sigma_v_sq, int n, double f0) {
    const MmseTrajectory traj = mmse_trajectory(derived, sigma0_sq, sigma_v_sq, n);
    RateReport r;
    r.n = n;
    r.n_star = threshold_cycles(sigma0_sq, sigma_v_sq, derived.q_sq);
    r.capacity = channel_capacity(f0, derived.q_sq);
    r.output_rate = output_bit_rate(n, f0, sigma0_sq, traj.p.back());
    r.regime = static_cast<double>(n) <= std::floor(r.n_star)
                   ? Regime::PreThreshold
                   : Regime::PostThreshold;
    return r;
}

}  // namespace afcs
