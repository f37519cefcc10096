#ifndef AFCS_ESTIMATOR_HPP
#define AFCS_ESTIMATOR_HPP

#include <vector>

#include "afcs/model.hpp"

namespace afcs {

/// Theoretical MMSE sequence P_0..P_n, p[0] = sigma0_sq.
struct MmseTrajectory {
    std::vector<double> p;
};

/// One step of the exact MMSE recursion:
///   P_k = P_{k-1} * ((1+Q^2) * sigma_v_sq + P_{k-1})
///               / ((1+Q^2) * (sigma_v_sq + P_{k-1}))
double mmse_step(double p_prev, double q_sq, double sigma_v_sq);

/// MMSE-optimal (covariance-ratio) estimator gain:
///   L_k = a * m_k * p_prev / (sigma_zeta_sq + a^2 * m_k^2 * (sigma_v_sq + p_prev))
/// At a = 1 this reduces to m_k^{-1} * (1 - P_k / P_{k-1}).
double gain(double m_k, double a, double p_prev, double sigma_v_sq,
            double sigma_zeta_sq);

/// Estimate update. The observation already has zero conditional mean
/// because the modulator is positioned at the previous estimate.
double update(double x_hat_prev, double l_k, double y_tilde);

/// Iterates the exact recursion from P_0 = sigma0_sq for n cycles.
MmseTrajectory mmse_trajectory(const DerivedParams& derived, double sigma0_sq,
                               double sigma_v_sq, int n);

}  // namespace afcs

#endif
