#include <cmath>

#include <doctest.h>

#include "afcs/analysis.hpp"
#include "afcs/modulator.hpp"
#include "afcs/montecarlo.hpp"

using namespace afcs;

namespace {

// sigma0_sq = 1, sigma_v_sq = 1e-4, Q^2 = 3, mu = 0.01, n = 12.
SystemConfig reference_config() {
    SystemConfig cfg;
    cfg.x0 = 0.0;
    cfg.sigma0_sq = 1.0;
    cfg.sigma_v_sq = 1e-4;
    cfg.n_zeta = 1.0;
    cfg.f0 = 1.0;
    cfg.mu = 0.01;
    cfg.gamma = 1.0;
    cfg.a0 = saturation_factor(cfg.mu) * std::sqrt(3.0);
    cfg.n_cycles = 12;
    return cfg;
}

}  // namespace

TEST_CASE("run_trial: fixed stream reproduces the record exactly") {
    const SystemConfig cfg = reference_config();
    const DerivedParams d = validate(cfg);
    RandomStream s1 = RandomStream::for_trial(42, 7);
    RandomStream s2 = RandomStream::for_trial(42, 7);
    const TrialRecord r1 = run_trial(cfg, d, s1);
    const TrialRecord r2 = run_trial(cfg, d, s2);
    CHECK(r1.x_true == r2.x_true);
    REQUIRE(r1.estimates.size() == 12);
    for (std::size_t k = 0; k < r1.estimates.size(); ++k) {
        CHECK(r1.estimates[k] == r2.estimates[k]);
        CHECK(r1.sq_errors[k] == r2.sq_errors[k]);
        CHECK(r1.clip_flags[k] == r2.clip_flags[k]);
    }
}

TEST_CASE("run_trial: zero cycles leaves the prior estimate") {
    SystemConfig cfg = reference_config();
    const DerivedParams d = validate(cfg);
    cfg.n_cycles = 0;
    double sum_sq = 0.0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
        RandomStream s = RandomStream::for_trial(5, static_cast<std::uint64_t>(t));
        const TrialRecord r = run_trial(cfg, d, s);
        CHECK(r.estimates.empty());
        const double e = r.x_true - cfg.x0;
        sum_sq += e * e;
    }
    // Ensemble squared error of the prior-only estimate is sigma0_sq.
    CHECK(sum_sq / trials == doctest::Approx(cfg.sigma0_sq).epsilon(0.05));
}

TEST_CASE("run_trial: near-noiseless channel recovers the sample") {
    SystemConfig cfg = reference_config();
    cfg.sigma_v_sq = 0.0;
    cfg.n_zeta = 1e-12;  // near-noiseless forward channel, huge Q^2
    cfg.n_cycles = 8;
    const DerivedParams d = validate(cfg);
    CHECK(d.q_sq > 1e12);

    // Recovery fails essentially only for trials that clip on the very
    // first cycle (probability mu), so the expected success rate is
    // 1 - mu up to binomial noise.
    int recovered = 0;
    const int trials = 2000;
    for (int t = 0; t < trials; ++t) {
        RandomStream s = RandomStream::for_trial(9, static_cast<std::uint64_t>(t));
        const TrialRecord r = run_trial(cfg, d, s);
        if (r.sq_errors.back() <= 1e-9) ++recovered;
    }
    const double floor =
        trials * (1.0 - cfg.mu) -
        4.0 * std::sqrt(cfg.mu * (1.0 - cfg.mu) * trials);
    CHECK(static_cast<double>(recovered) >= floor);
}

TEST_CASE("run_ensemble: reproducible, seed-sensitive, rejects zero trials") {
    const SystemConfig cfg = reference_config();
    const EnsembleStats a = run_ensemble(cfg, 500, 42);
    const EnsembleStats b = run_ensemble(cfg, 500, 42);
    const EnsembleStats c = run_ensemble(cfg, 500, 43);
    CHECK(a.mean_sq_error == b.mean_sq_error);
    CHECK(a.mean_error == b.mean_error);
    CHECK(a.clip_events == b.clip_events);
    CHECK(a.mean_sq_error != c.mean_sq_error);
    CHECK_THROWS_AS(run_ensemble(cfg, 0, 1), std::domain_error);
}

TEST_CASE("run_ensemble: parallel execution is bit-identical to sequential") {
    const SystemConfig cfg = reference_config();
    const EnsembleStats seq = run_ensemble(cfg, 4000, 11, 1);
    const EnsembleStats par = run_ensemble(cfg, 4000, 11, 4);
    CHECK(seq.mean_sq_error == par.mean_sq_error);
    CHECK(seq.stderr_sq_error == par.stderr_sq_error);
    CHECK(seq.mean_error == par.mean_error);
    CHECK(seq.clip_events == par.clip_events);
    CHECK(seq.mean_sq_error_unclipped == par.mean_sq_error_unclipped);
}

TEST_CASE("run_ensemble: self-consistency in the linear regime") {
    // Keep clipping negligible so the linear-model MMSE is the exact
    // description of the simulated system.
    SystemConfig cfg = reference_config();
    cfg.mu = 1e-6;
    cfg.a0 = saturation_factor(cfg.mu) * std::sqrt(3.0);
    const DerivedParams d = validate(cfg);
    const EnsembleStats stats = run_ensemble(cfg, 20000, 2024);
    const MmseTrajectory traj =
        mmse_trajectory(d, cfg.sigma0_sq, cfg.sigma_v_sq, cfg.n_cycles);

    const ComparisonReport rep = compare(stats, traj, cfg.mu);
    CHECK(rep.mse_pass);
    CHECK(rep.max_abs_z <= 4.0);

    // Prior-cycle empirical MSE converges on sigma0_sq.
    CHECK(stats.mean_sq_error[0] ==
          doctest::Approx(cfg.sigma0_sq).epsilon(0.05));

    // Bias check: mean error within 4 standard errors of zero.
    for (int k = 0; k <= cfg.n_cycles; ++k) {
        const double se = std::sqrt(traj.p[static_cast<std::size_t>(k)] /
                                    static_cast<double>(stats.trials));
        CHECK(std::abs(stats.mean_error[static_cast<std::size_t>(k)]) <= 4.0 * se);
    }
}

TEST_CASE("run_ensemble: clipping leaves rough errors in the aggregate") {
    // With mu = 0.01 the trials that clip keep an elevated error while
    // the theoretical MMSE shrinks, so the aggregate MSE sits above
    // P_k at late cycles and the clip rate exceeds mu itself. The
    // clipped-excluded diagnostic tracks theory much more closely.
    const SystemConfig cfg = reference_config();
    const DerivedParams d = validate(cfg);
    const EnsembleStats stats = run_ensemble(cfg, 20000, 2024);
    const MmseTrajectory traj =
        mmse_trajectory(d, cfg.sigma0_sq, cfg.sigma_v_sq, cfg.n_cycles);

    CHECK(stats.clip_rate > cfg.mu * 0.9);
    CHECK(stats.clip_rate < cfg.mu * 2.0);

    CHECK(stats.unclipped_trials > 0);
    const std::size_t last = static_cast<std::size_t>(cfg.n_cycles);
    CHECK(stats.mean_sq_error[last] > traj.p[last]);
    CHECK(stats.mean_sq_error_unclipped[last] ==
          doctest::Approx(traj.p[last]).epsilon(0.15));

    // Rough errors are sign-symmetric: the bias stays compatible with 0
    // when measured against the empirical spread.
    for (std::size_t k = 0; k <= last; ++k) {
        const double se = std::sqrt(stats.mean_sq_error[k] /
                                    static_cast<double>(stats.trials));
        CHECK(std::abs(stats.mean_error[k]) <= 4.0 * se);
    }
}

TEST_CASE("compare: detects a deliberately wrong trajectory") {
    const SystemConfig cfg = reference_config();
    const DerivedParams d = validate(cfg);
    const EnsembleStats stats = run_ensemble(cfg, 20000, 77);

    DerivedParams wrong = d;
    wrong.q_sq = 2.0 * d.q_sq;
    const MmseTrajectory bad =
        mmse_trajectory(wrong, cfg.sigma0_sq, cfg.sigma_v_sq, cfg.n_cycles);
    const ComparisonReport rep = compare(stats, bad, cfg.mu);
    CHECK_FALSE(rep.mse_pass);
    CHECK(rep.max_abs_z > 10.0);
}

TEST_CASE("compare: rejects a cycle-count mismatch") {
    const SystemConfig cfg = reference_config();
    const DerivedParams d = validate(cfg);
    const EnsembleStats stats = run_ensemble(cfg, 100, 1);
    const MmseTrajectory short_traj =
        mmse_trajectory(d, cfg.sigma0_sq, cfg.sigma_v_sq, cfg.n_cycles - 1);
    CHECK_THROWS_AS(compare(stats, short_traj, cfg.mu), std::invalid_argument);
}

TEST_CASE("clip events: exact Bernoulli(mu) at cycle 1, elevated later") {
    // The statistical-fitting rule makes the first-cycle drive exactly
    // Gaussian with the designed variance, so its clip frequency is a
    // clean Bernoulli(mu) sample. Later cycles clip more often because
    // a trial that has clipped once tends to clip again.
    const SystemConfig cfg = reference_config();
    const DerivedParams d = validate(cfg);
    const std::uint64_t trials = 50000;
    std::vector<std::uint64_t> per_cycle(static_cast<std::size_t>(cfg.n_cycles), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomStream s = RandomStream::for_trial(314, t);
        const TrialRecord r = run_trial(cfg, d, s);
        for (std::size_t k = 0; k < per_cycle.size(); ++k)
            if (r.clip_flags[k]) ++per_cycle[k];
    }
    const double band =
        4.0 * std::sqrt(cfg.mu * (1.0 - cfg.mu) / static_cast<double>(trials));
    const double first = static_cast<double>(per_cycle[0]) / trials;
    CHECK(std::abs(first - cfg.mu) <= band);
    for (std::size_t k = 1; k < per_cycle.size(); ++k) {
        const double freq = static_cast<double>(per_cycle[k]) / trials;
        CHECK(freq >= cfg.mu - band);
        CHECK(freq <= 1.6 * cfg.mu + band);
    }
}
