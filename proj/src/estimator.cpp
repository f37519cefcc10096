#include "afcs/estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace afcs {

double mmse_step(double p_prev, double q_sq, double sigma_v_sq) {
    if (!(p_prev > 0.0)) throw std::domain_error("mmse_step: p_prev must be > 0");
    if (!(q_sq >= 0.0)) throw std::domain_error("mmse_step: q_sq must be >= 0");
    const double g = 1.0 + q_sq;
    return p_prev * (g * sigma_v_sq + p_prev) / (g * (sigma_v_sq + p_prev));
}

double gain(double m_k, double a, double p_prev, double sigma_v_sq,
            double sigma_zeta_sq) {
    if (!(m_k > 0.0)) throw std::domain_error("gain: m_k must be > 0");
    if (!(a > 0.0)) throw std::domain_error("gain: a must be > 0");
    if (!(p_prev > 0.0)) throw std::domain_error("gain: p_prev must be > 0");
    if (!(sigma_v_sq >= 0.0)) throw std::domain_error("gain: sigma_v_sq must be >= 0");
    if (!(sigma_zeta_sq > 0.0))
        throw std::domain_error("gain: sigma_zeta_sq must be > 0");
    const double am = a * m_k;
    return am * p_prev / (sigma_zeta_sq + am * am * (sigma_v_sq + p_prev));
}

double update(double x_hat_prev, double l_k, double y_tilde) {
    return x_hat_prev + l_k * y_tilde;
}

MmseTrajectory mmse_trajectory(const DerivedParams& derived, double sigma0_sq,
                               double sigma_v_sq, int n) {
    if (n < 0) throw std::domain_error("mmse_trajectory: n must be >= 0");
    MmseTrajectory traj;
    traj.p.reserve(static_cast<std::size_t>(n) + 1);
    traj.p.push_back(sigma0_sq);
    for (int k = 1; k <= n; ++k)
        traj.p.push_back(mmse_step(traj.p.back(), derived.q_sq, sigma_v_sq));
    return traj;
}

}  // namespace afcs
