#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "phel/density.hpp"
#include "phel/entangled.hpp"
#include "phel/quadrature.hpp"

using namespace phel::density;
using phel::specfun::Complex;
using doctest::Approx;

TEST_CASE("asymptotic distribution") {
    auto d0 = photon_dist_asymptotic(0.0);
    CHECK(d0.at(0) == Approx(1.0));
    CHECK(d0.at(1) == 0.0);
    auto d = photon_dist_asymptotic(2.5);
    CHECK(d.at(0) == Approx(0.27004644161220304).epsilon(1e-10));
    CHECK(d.at(1) == Approx(0.20658464953126673).epsilon(1e-10));
    CHECK(d.at(1) == d.at(-1));
    CHECK(d.norm_defect < 1e-12);
    for (double q : {0.1, 1.0, 5.0, 25.0, 50.0})
        CHECK(photon_dist_asymptotic(q).norm_defect < 1e-12);
}

TEST_CASE("exact distribution") {
    // b -> 0 limit concentrates on k = 0
    CHECK(photon_weight_exact(0, 30, 1e-8) == Approx(1.0).epsilon(1e-10));
    CHECK(photon_weight_exact(1, 30, 1e-8) < 1e-10);
    auto d = photon_dist_exact(30, 2.0 / (2.0 * std::sqrt(30.0)));
    CHECK(d.norm_defect < 1e-10);
    for (double w : d.weights) CHECK(w >= 0.0);
    CHECK_THROWS_AS(photon_weight_exact(0, 5, 1.0), std::domain_error);
    // b > 1 branch stays positive too
    CHECK(photon_weight_exact(3, 10, 1.4) > 0.0);
}

TEST_CASE("exact approaches asymptotic at fixed q") {
    double prev = 1e9;
    for (long n0 : {100L, 1000L, 10000L}) {
        double b = 2.0 / (2.0 * std::sqrt(double(n0)));
        auto asym = photon_dist_asymptotic(2.0);
        double dev = 0.0;
        for (int k = -8; k <= 8; ++k)
            dev = std::max(dev, std::abs(photon_weight_exact(k, n0, b) - asym.at(k)));
        CHECK(dev < prev);
        prev = dev;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_photon(0.0) == 0.0);
    // direct -sum p ln p oracle
    for (double q : {0.5, 2.5, 10.0}) {
        auto d = photon_dist_asymptotic(q);
        double s = 0.0;
        for (double w : d.weights)
            if (w > 0.0) s -= w * std::log(w);
        CHECK(von_neumann_photon(q) == Approx(s).epsilon(1e-12));
    }
    // logarithmic growth: slope in log q flattens
    double s1 = von_neumann_photon(10.0), s2 = von_neumann_photon(100.0),
           s3 = von_neumann_photon(1000.0);
    CHECK(s3 - s2 == Approx(s2 - s1).epsilon(0.15));
}

TEST_CASE("linear entropy photon") {
    CHECK(linear_entropy_photon(0.0) == 0.0);
    CHECK(linear_entropy_photon(2.0) == Approx(0.7929980787760134).epsilon(1e-9));
    for (double q : {0.5, 2.0, 7.0}) {
        auto d = photon_dist_asymptotic(q);
        double p2 = 0.0;
        for (double w : d.weights) p2 += w * w;
        CHECK(1.0 - linear_entropy_photon(q) == Approx(p2).epsilon(1e-12));
    }
}

TEST_CASE("electron linear entropy") {
    // u = 1/(2b^2) near 1 is a removable singularity; the log-domain form
    // stays accurate through it
    double h_near = linear_entropy_electron_exact(10, std::sqrt(0.5));
    CHECK(h_near > 0.0);
    CHECK(h_near < 1.0);
    double lo = linear_entropy_electron_exact(10, 0.706);
    double hi = linear_entropy_electron_exact(10, 0.709);
    CHECK(h_near > std::min(lo, hi));
    CHECK(h_near < std::max(lo, hi));
    double h = linear_entropy_electron_exact(1000000, 2.0 / (2.0 * std::sqrt(1e6)));
    CHECK(h == Approx(linear_entropy_photon(2.0)).epsilon(1e-3));
    // 2b^2 > 1 side works as well
    double h2 = linear_entropy_electron_exact(5, 1.2);
    CHECK(h2 > 0.0);
    CHECK(h2 < 1.0);
}

TEST_CASE("momentum density") {
    Vec2 p1{0.5, -0.2}, p2{-0.1, 0.8};
    Complex v12 = electron_momentum_density(p1, p2, 30, 0.3, 0.7);
    Complex v21 = electron_momentum_density(p2, p1, 30, 0.3, 0.7);
    CHECK(std::abs(v12 - std::conj(v21)) < 1e-15);
    // diagonal is |g|^2, time independent
    Complex d1 = electron_momentum_density(p1, p1, 30, 0.3, 0.0);
    Complex d2 = electron_momentum_density(p1, p1, 30, 0.3, 5.0);
    double expect = std::exp(-(p1[0] * p1[0] + p1[1] * p1[1])) / M_PI;
    CHECK(d1.real() == Approx(expect).epsilon(1e-13));
    CHECK(std::abs(d1 - d2) < 1e-15);
    // trace via quadrature
    auto f = [&](double r) -> Complex {
        return 2.0 * M_PI * r *
               electron_momentum_density({r, 0.0}, {r, 0.0}, 30, 0.3, 0.7);
    };
    auto t = phel::quad::integrate_semi_infinite(f, 1e-10, 8.0, 1e-18);
    CHECK(t.value.real() == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("position density") {
    // hermiticity
    Complex v12 = electron_position_density(1.0, 2.0, 0.8, 2.0);
    Complex v21 = electron_position_density(2.0, 1.0, 0.8, 2.0);
    CHECK(std::abs(v12 - std::conj(v21)) < 1e-15);
    // drive = 0 free Gaussian with width sqrt(1+theta^2)
    for (double th : {0.0, 2.0}) {
        double x = 1.3;
        double den = 1.0 + th * th;
        double expect = std::exp(-x * x / den) / (M_PI * den);
        CHECK(position_distribution(x, th, 0.0) == Approx(expect).epsilon(1e-13));
    }
    // diagonal equals the xi-coefficient sum
    for (double th : {0.0, 1.0}) {
        auto xi = phel::entangled::xi_coefficients({1.5, 0.0, th}, 2.0);
        CHECK(position_distribution(1.5, th, 2.0) ==
              Approx(xi.photon_norm_sq).epsilon(1e-10));
    }
    // normalization
    for (double th : {0.0, 1.0, 5.0}) {
        auto f = [&](double x) -> Complex {
            return 2.0 * M_PI * x * position_distribution(x, th, 2.0);
        };
        auto r = phel::quad::integrate_semi_infinite(f, 1e-9, 10.0, 1e-16);
        CHECK(r.value.real() == Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("entropy report") {
    auto r0 = entropy_report(0.0);
    CHECK(r0.von_neumann == 0.0);
    CHECK(r0.linear == 0.0);
    CHECK(r0.schmidt_number == Approx(1.0));
    for (double q : {0.5, 2.0, 10.0, 40.0}) {
        auto r = entropy_report(q);
        CHECK(r.linear == Approx(1.0 - std::exp(-r.renyi2)).epsilon(1e-12));
        CHECK(r.schmidt_number == Approx(std::exp(r.renyi2)).epsilon(1e-12));
        CHECK(r.von_neumann >= r.renyi2 - 1e-12);
    }
    auto re = entropy_report(2.0, 1000, 2.0 / (2.0 * std::sqrt(1000.0)));
    CHECK(re.electron_linear_exact.has_value());
    CHECK(*re.electron_linear_exact == Approx(re.linear).epsilon(0.05));
}

TEST_CASE("mutation sensitivity: a 1e-3 constant shift is caught") {
    // purity identity with I_0(2q) perturbed fails the 1e-12 agreement gate
    double q = 2.0;
    auto d = photon_dist_asymptotic(q);
    double p2 = 0.0;
    for (double w : d.weights) p2 += w * w;
    double mutated = (1.0 + 1e-3) * (1.0 - linear_entropy_photon(q));
    CHECK(std::abs(p2 - (1.0 - linear_entropy_photon(q))) < 1e-12);
    CHECK(std::abs(p2 - mutated) > 1e-12);
}
