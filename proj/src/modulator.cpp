#include "afcs/modulator.hpp"

#include <cmath>
#include <stdexcept>

namespace afcs {

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

namespace {

// Acklam's rational approximation to the normal quantile (~1e-9),
// used as the seed for a Halley refinement below.
double quantile_seed(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must lie in (0, 1)");
    double x = quantile_seed(p);
    // One Halley step against the erfc-based CDF brings the result to
    // full double precision.
    static const double sqrt_2pi = std::sqrt(2.0 * std::acos(-1.0));
    const double e = normal_cdf(x) - p;
    const double u = e * sqrt_2pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double saturation_factor(double mu) {
    if (!(mu > 0.0 && mu < 0.5))
        throw std::domain_error("saturation_factor: mu must lie in (0, 0.5)");
    return normal_quantile(1.0 - 0.5 * mu);
}

ModulatorState adapt(double x_hat_prev, double p_prev, double sigma_v_sq,
                     double alpha, int cycle) {
    if (!(p_prev > 0.0) && sigma_v_sq == 0.0)
        throw std::domain_error("adapt: degenerate state, gain diverges");
    if (!(alpha > 0.0)) throw std::domain_error("adapt: alpha must be > 0");
    const double m_k = 1.0 / (alpha * std::sqrt(sigma_v_sq + p_prev));
    return ModulatorState{x_hat_prev, m_k, cycle};
}

Emission emit(double e_k, double m_k) {
    const double drive = m_k * e_k;
    if (std::abs(drive) <= 1.0) return Emission{drive, false};
    return Emission{drive > 0.0 ? 1.0 : -1.0, true};
}

double overmod_probability(double m_k, double sigma_e_sq) {
    if (!(m_k > 0.0))
        throw std::domain_error("overmod_probability: m_k must be > 0");
    if (!(sigma_e_sq > 0.0))
        throw std::domain_error("overmod_probability: sigma_e_sq must be > 0");
    const double threshold = 1.0 / (m_k * std::sqrt(sigma_e_sq));
    return std::erfc(threshold / std::sqrt(2.0));
}

}  // namespace afcs
