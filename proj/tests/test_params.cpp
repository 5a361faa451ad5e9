#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "phel/params.hpp"

using namespace phel::params;
using doctest::Approx;

TEST_CASE("derive reproduces the caption values") {
    PhysicalConfig cfg;
    cfg.intensity_W_cm2 = 1e12;
    auto d = derive(cfg);
    CHECK(d.mu == Approx(1e-3).epsilon(1e-14));
    CHECK(d.drive == Approx(2.0).epsilon(1e-12));
    CHECK(d.q == Approx(2.0).epsilon(1e-12));
    CHECK(d.omega_tau0 == Approx(0.1277).epsilon(1e-3));
    CHECK(d.mass_ratio == Approx(1.0));
    CHECK(d.tau_ratio == d.mass_ratio);
}

TEST_CASE("scale consistency") {
    PhysicalConfig cfg;
    cfg.intensity_W_cm2 = 3.7e11;
    auto d1 = derive(cfg);
    cfg.intensity_W_cm2 *= 2.0;
    auto d2 = derive(cfg);
    CHECK(d2.mu == Approx(d1.mu * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(d2.q == Approx(d1.q * 2.0).epsilon(1e-14));
}

TEST_CASE("b ties drive and n0") {
    PhysicalConfig cfg;
    cfg.intensity_W_cm2 = 1e12;
    cfg.n0 = 400;
    auto d = derive(cfg);
    CHECK(d.b_valid);
    CHECK(d.b * 2.0 * std::sqrt(400.0) == Approx(d.drive).epsilon(1e-14));
    cfg.n0 = 0;
    CHECK_FALSE(derive(cfg).b_valid);
}

TEST_CASE("mean occupation per Table B.1") {
    PhysicalConfig cfg;
    cfg.intensity_W_cm2 = 1.0;
    cfg.photon_energy_eV = 1.57;
    cfg.bandwidth_ratio = 2.0;
    CHECK(mean_occupation(cfg) == Approx(9e-6).epsilon(0.15));
    cfg.intensity_W_cm2 = 0.0;
    CHECK(mean_occupation(cfg) == 0.0);
}

TEST_CASE("intensity_for_q inverts the q map") {
    for (double q : {2.5, 5.0, 25.0, 50.0}) {
        PhysicalConfig cfg;
        cfg.intensity_W_cm2 = intensity_for_q(q, 1.0, cfg.lambda_over_w);
        CHECK(derive(cfg).q == Approx(q).epsilon(1e-12));
    }
    PhysicalConfig cfg;
    cfg.intensity_W_cm2 = intensity_for_q(2.5, 1.0, cfg.lambda_over_w);
    CHECK(cfg.intensity_W_cm2 == Approx(1.25e12).epsilon(1e-10));
}

TEST_CASE("validation rejects bad configs") {
    PhysicalConfig cfg;
    cfg.plasma_ratio = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.plasma_ratio = 0.5;
    cfg.photon_energy_eV = -1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("plasma ratio feeds the mass ratio") {
    PhysicalConfig cfg;
    cfg.plasma_ratio = 0.5;
    CHECK(derive(cfg).mass_ratio == Approx(3.0).epsilon(1e-14));
}
