#include <cmath>

#include <doctest.h>

#include "afcs/model.hpp"
#include "afcs/modulator.hpp"
#include "oracle.hpp"

using namespace afcs;

namespace {

SystemConfig reference_config() {
    SystemConfig cfg;
    cfg.x0 = 0.0;
    cfg.sigma0_sq = 1.0;
    cfg.sigma_v_sq = 1e-4;
    cfg.a0 = 2.0;
    cfg.gamma = 1.0;
    cfg.n_zeta = 1.0;
    cfg.f0 = 1.0;
    cfg.mu = 0.01;
    cfg.n_cycles = 12;
    return cfg;
}

}  // namespace

TEST_CASE("validate: unit-gain config with alpha = 2 gives q_sq = 1") {
    SystemConfig cfg = reference_config();
    // mu chosen so the saturation factor is exactly 2.
    cfg.mu = std::erfc(2.0 / std::sqrt(2.0));
    const DerivedParams d = validate(cfg);
    CHECK(d.a == doctest::Approx(2.0));
    CHECK(d.sigma_zeta_sq == doctest::Approx(1.0));
    CHECK(d.alpha == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(d.q_sq == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("validate: reference config derived constants") {
    const DerivedParams d = validate(reference_config());
    CHECK(d.alpha == doctest::Approx(2.5758).epsilon(1e-4));
    CHECK(d.q_sq == doctest::Approx(0.6029).epsilon(1e-3));
}

TEST_CASE("validate: rejects out-of-range fields naming them") {
    SystemConfig cfg = reference_config();

    cfg.mu = 0.6;
    CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("mu"), ValidationError);

    cfg = reference_config();
    cfg.sigma0_sq = 0.0;
    CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("sigma0_sq"),
                         ValidationError);

    cfg = reference_config();
    cfg.sigma_v_sq = -1.0;
    CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("sigma_v_sq"),
                         ValidationError);

    cfg = reference_config();
    cfg.n_zeta = 0.0;
    CHECK_THROWS_AS(validate(cfg), ValidationError);

    cfg = reference_config();
    cfg.gamma = -1.0;  // a0 * gamma < 0
    CHECK_THROWS_AS(validate(cfg), ValidationError);

    cfg = reference_config();
    cfg.n_cycles = 0;
    CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("n_cycles"),
                         ValidationError);
}

TEST_CASE("validate: f_base must match n_cycles") {
    SystemConfig cfg = reference_config();
    cfg.f0 = 8.0;
    cfg.f_base = 2.0;
    cfg.n_cycles = 4;
    CHECK_NOTHROW(validate(cfg));

    cfg.n_cycles = 3;
    CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("n_cycles"),
                         ValidationError);

    cfg.n_cycles = 4;
    cfg.f_base = 2.3;  // f0 / f_base not an integer
    CHECK_THROWS_WITH_AS(validate(cfg), doctest::Contains("f_base"),
                         ValidationError);
}

TEST_CASE("validate: w_sign * alpha^2 == a^2 over random configs") {
    oracle::Rng rng(101);
    for (int i = 0; i < 200; ++i) {
        SystemConfig cfg = reference_config();
        cfg.a0 = rng.log_uniform(0.1, 100.0);
        cfg.gamma = rng.log_uniform(0.01, 10.0);
        cfg.n_zeta = rng.log_uniform(1e-3, 1e3);
        cfg.f0 = rng.log_uniform(0.1, 1e4);
        cfg.mu = rng.uniform(1e-4, 0.49);
        const DerivedParams d = validate(cfg);
        const double a_sq = d.a * d.a;
        CHECK(d.w_sign * d.alpha * d.alpha ==
              doctest::Approx(a_sq).epsilon(1e-12));
        CHECK(d.w_sign == doctest::Approx(d.q_sq * d.sigma_zeta_sq).epsilon(1e-12));
    }
}

TEST_CASE("validate: deterministic and pure") {
    const SystemConfig cfg = reference_config();
    const DerivedParams d1 = validate(cfg);
    const DerivedParams d2 = validate(cfg);
    CHECK(d1.a == d2.a);
    CHECK(d1.sigma_zeta_sq == d2.sigma_zeta_sq);
    CHECK(d1.alpha == d2.alpha);
    CHECK(d1.q_sq == d2.q_sq);
    CHECK(d1.w_sign == d2.w_sign);
}
