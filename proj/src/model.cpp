#include "afcs/model.hpp"

#include <cmath>

#include "afcs/modulator.hpp"

namespace afcs {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

}  // namespace

DerivedParams validate(const SystemConfig& config) {
    require(std::isfinite(config.x0), "x0: must be finite");
    require(std::isfinite(config.sigma0_sq) && config.sigma0_sq > 0.0,
            "sigma0_sq: must be > 0");
    require(std::isfinite(config.sigma_v_sq) && config.sigma_v_sq >= 0.0,
            "sigma_v_sq: must be >= 0");
    require(std::isfinite(config.n_zeta) && config.n_zeta > 0.0,
            "n_zeta: must be > 0");
    require(std::isfinite(config.f0) && config.f0 > 0.0, "f0: must be > 0");
    require(std::isfinite(config.mu) && config.mu > 0.0 && config.mu < 0.5,
            "mu: must lie in (0, 0.5)");
    require(config.n_cycles > 0, "n_cycles: must be a positive integer");
    require(std::isfinite(config.a0) && std::isfinite(config.gamma) &&
                config.a0 * config.gamma > 0.0,
            "a0, gamma: product a0 * gamma must be > 0");

    if (config.f_base) {
        require(*config.f_base > 0.0, "f_base: must be > 0");
        const double ratio = config.f0 / *config.f_base;
        const double nearest = std::round(ratio);
        require(std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio),
                "f_base: f0 / f_base is not an integer cycle count");
        require(static_cast<int>(nearest) == config.n_cycles,
                "n_cycles: disagrees with f0 / f_base");
    }

    DerivedParams d;
    d.a = config.a0 * config.gamma;
    d.sigma_zeta_sq = config.n_zeta * config.f0;
    require(d.sigma_zeta_sq > 0.0,
            "n_zeta, f0: degenerate noiseless forward channel");
    d.alpha = saturation_factor(config.mu);
    const double amp = d.a / d.alpha;
    d.w_sign = amp * amp;
    d.q_sq = d.w_sign / d.sigma_zeta_sq;
    return d;
}

}  // namespace afcs
