#ifndef AFCS_MODULATOR_HPP
#define AFCS_MODULATOR_HPP

#include "afcs/model.hpp"

namespace afcs {

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse standard normal CDF, accurate to about 1 ulp (rational
/// approximation refined by one Halley step). p must be in (0, 1).
double normal_quantile(double p);

/// Output of the saturating modulator for one cycle.
struct Emission {
    double value;  // normalized output in [-1, 1]
    bool clipped;  // true iff |m_k * e_k| > 1
};

/// Saturation factor for clip probability mu: the alpha > 0 with
/// Pr(|Z| > alpha) = mu for standard normal Z, i.e. the (1 - mu/2)-quantile.
/// mu must lie in (0, 0.5).
double saturation_factor(double mu);

/// Per-cycle modulator adjustment: position the transfer function at the
/// current estimate and scale the gain so the drive stays linear with
/// probability 1 - mu (alpha = saturation_factor(mu)).
///   b_k = x_hat_prev,  m_k = 1 / (alpha * sqrt(sigma_v_sq + p_prev))
ModulatorState adapt(double x_hat_prev, double p_prev, double sigma_v_sq,
                     double alpha, int cycle = 1);

/// Saturating emission: linear for |m_k * e_k| <= 1, hard-clipped to +-1 beyond.
Emission emit(double e_k, double m_k);

/// Probability that a zero-mean Gaussian drive of variance sigma_e_sq
/// exceeds the linear range: Pr(m_k * |e_k| > 1).
double overmod_probability(double m_k, double sigma_e_sq);

}  // namespace afcs

#endif
