#include "afcs/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "afcs/modulator.hpp"

namespace afcs {

TrialRecord run_trial(const SystemConfig& config, const DerivedParams& derived,
                      RandomStream& stream) {
    const int n = config.n_cycles;
    const MmseTrajectory traj =
        mmse_trajectory(derived, config.sigma0_sq, config.sigma_v_sq, n);

    TrialRecord rec;
    rec.x_true = config.x0 + std::sqrt(config.sigma0_sq) * stream.next_gaussian();
    rec.estimates.reserve(n);
    rec.sq_errors.reserve(n);
    rec.clip_flags.reserve(n);

    const double sigma_v = std::sqrt(config.sigma_v_sq);
    const double sigma_zeta = std::sqrt(derived.sigma_zeta_sq);

    double x_hat = config.x0;
    for (int k = 1; k <= n; ++k) {
        const double p_prev = traj.p[static_cast<std::size_t>(k) - 1];
        const ModulatorState mod =
            adapt(x_hat, p_prev, config.sigma_v_sq, derived.alpha, k);
        // Feedback noise enters the position only; the gain is computed
        // identically on both sides from the open-loop schedule.
        const double v_k = sigma_v * stream.next_gaussian();
        const double e_k = rec.x_true - mod.b_k - v_k;
        const Emission em = emit(e_k, mod.m_k);
        const double zeta_k = sigma_zeta * stream.next_gaussian();
        const double y_tilde = derived.a * em.value + zeta_k;
        const double l_k = gain(mod.m_k, derived.a, p_prev, config.sigma_v_sq,
                                derived.sigma_zeta_sq);
        x_hat = update(x_hat, l_k, y_tilde);

        rec.estimates.push_back(x_hat);
        const double err = rec.x_true - x_hat;
        rec.sq_errors.push_back(err * err);
        rec.clip_flags.push_back(em.clipped);
    }
    return rec;
}

EnsembleStats run_ensemble(const SystemConfig& config, std::uint64_t trials,
                           std::uint64_t seed, int threads) {
    if (trials == 0) throw std::domain_error("run_ensemble: trials must be >= 1");
    const DerivedParams derived = validate(config);
    const int n = config.n_cycles;
    const std::size_t cols = static_cast<std::size_t>(n) + 1;

    // Per-trial rows are computed independently (optionally in parallel)
    // and reduced in trial order, so results do not depend on scheduling.
    std::vector<double> sq(trials * cols);
    std::vector<double> err(trials * cols);
    std::vector<std::uint32_t> clips(trials);
    std::vector<std::uint8_t> any_clip(trials);

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            RandomStream stream = RandomStream::for_trial(seed, t);
            const TrialRecord rec = run_trial(config, derived, stream);
            const double e0 = rec.x_true - config.x0;
            sq[t * cols] = e0 * e0;
            err[t * cols] = e0;
            std::uint32_t c = 0;
            for (int k = 1; k <= n; ++k) {
                const std::size_t i = t * cols + static_cast<std::size_t>(k);
                sq[i] = rec.sq_errors[static_cast<std::size_t>(k) - 1];
                err[i] = rec.x_true - rec.estimates[static_cast<std::size_t>(k) - 1];
                if (rec.clip_flags[static_cast<std::size_t>(k) - 1]) ++c;
            }
            clips[t] = c;
            any_clip[t] = c > 0 ? 1 : 0;
        }
    };

    int nthreads = threads > 0
                       ? threads
                       : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    if (static_cast<std::uint64_t>(nthreads) > trials)
        nthreads = static_cast<int>(trials);
    if (nthreads == 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        const std::uint64_t chunk = (trials + nthreads - 1) / nthreads;
        for (int i = 0; i < nthreads; ++i) {
            const std::uint64_t b = static_cast<std::uint64_t>(i) * chunk;
            const std::uint64_t e = std::min(trials, b + chunk);
            if (b >= e) break;
            pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    EnsembleStats stats;
    stats.trials = trials;
    stats.seed = seed;
    stats.n = n;
    stats.mean_sq_error.assign(cols, 0.0);
    stats.stderr_sq_error.assign(cols, 0.0);
    stats.mean_error.assign(cols, 0.0);
    stats.mean_sq_error_unclipped.assign(cols, 0.0);

    std::vector<double> sumsq(cols, 0.0);
    std::uint64_t clip_events = 0;
    std::uint64_t unclipped = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const bool clean = any_clip[t] == 0;
        if (clean) ++unclipped;
        clip_events += clips[t];
        for (std::size_t k = 0; k < cols; ++k) {
            const double s = sq[t * cols + k];
            stats.mean_sq_error[k] += s;
            sumsq[k] += s * s;
            stats.mean_error[k] += err[t * cols + k];
            if (clean) stats.mean_sq_error_unclipped[k] += s;
        }
    }
    const double tr = static_cast<double>(trials);
    for (std::size_t k = 0; k < cols; ++k) {
        const double mean = stats.mean_sq_error[k] / tr;
        stats.mean_sq_error[k] = mean;
        stats.mean_error[k] /= tr;
        if (trials > 1) {
            const double var = (sumsq[k] - tr * mean * mean) / (tr - 1.0);
            stats.stderr_sq_error[k] = std::sqrt(std::max(0.0, var) / tr);
        }
        stats.mean_sq_error_unclipped[k] =
            unclipped > 0 ? stats.mean_sq_error_unclipped[k] /
                                static_cast<double>(unclipped)
                          : 0.0;
    }
    stats.clip_events = clip_events;
    stats.unclipped_trials = unclipped;
    const double draws = tr * static_cast<double>(n);
    stats.clip_rate = static_cast<double>(clip_events) / draws;
    stats.clip_rate_stddev =
        std::sqrt(std::max(0.0, stats.clip_rate * (1.0 - stats.clip_rate)) / draws);
    return stats;
}

ComparisonReport compare(const EnsembleStats& stats,
                         const MmseTrajectory& trajectory, double mu) {
    if (stats.mean_sq_error.size() != trajectory.p.size())
        throw std::invalid_argument("compare: cycle-count mismatch");

    ComparisonReport rep;
    const std::size_t cols = trajectory.p.size();
    rep.z_scores.resize(cols);
    rep.cycle_pass.resize(cols);
    rep.mse_pass = true;
    for (std::size_t k = 0; k < cols; ++k) {
        const double diff = stats.mean_sq_error[k] - trajectory.p[k];
        const double se = stats.stderr_sq_error[k];
        rep.z_scores[k] = se > 0.0 ? diff / se : 0.0;
        rep.max_abs_z = std::max(rep.max_abs_z, std::abs(rep.z_scores[k]));
        // 4-sigma band widened by the O(mu) clipping-bias allowance.
        const bool ok = std::abs(diff) <= 4.0 * se + 2.0 * mu * trajectory.p[k];
        rep.cycle_pass[k] = ok;
        if (!ok) rep.mse_pass = false;
    }
    const double draws =
        static_cast<double>(stats.trials) * static_cast<double>(stats.n);
    rep.clip_rate = stats.clip_rate;
    rep.clip_band_halfwidth = 4.0 * std::sqrt(mu * (1.0 - mu) / draws);
    rep.clip_pass = std::abs(stats.clip_rate - mu) <= rep.clip_band_halfwidth;
    rep.pass = rep.mse_pass && rep.clip_pass;
    return rep;
}

}  // namespace afcs
