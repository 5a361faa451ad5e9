#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "phel/entangled.hpp"
#include "phel/oracle.hpp"

using namespace phel::entangled;
using phel::specfun::Complex;
using doctest::Approx;

TEST_CASE("gamma_of arithmetic") {
    CHECK(std::abs(gamma_of({0.0, 0.0, 1.0}, 3.0)) == 0.0);
    CHECK(gamma_of({2.0, 0.0, 0.0}, 2.0).real() == Approx(4.0));
    Complex g = gamma_of({10.0, 0.0, 1.0}, 4.0);
    CHECK(g.real() == Approx(20.0).epsilon(1e-14));
    CHECK(g.imag() == Approx(-20.0).epsilon(1e-14));
    // bilinear in x and drive
    Complex a = gamma_of({3.0, 0.0, 0.7}, 1.5);
    Complex b = gamma_of({6.0, 0.0, 0.7}, 1.5);
    CHECK(std::abs(b - 2.0 * a) < 1e-15);
}

TEST_CASE("packet factor") {
    CHECK(std::abs(packet_factor({0.0, 0.0, 0.0}, 0.0) - 1.0 / std::sqrt(M_PI)) < 1e-15);
    // Gaussian modulus at theta = 0
    double drive = 1.3;
    for (double x : {0.0, 0.8, 2.0}) {
        double expect = std::exp(-(drive * drive + x * x)) / M_PI;
        CHECK(std::norm(packet_factor({x, 0.0, 0.0}, drive)) == Approx(expect).epsilon(1e-13));
    }
    CHECK(std::abs(packet_factor({1.0, 0.0, 100.0}, 1.0)) < 1e-2);
}

TEST_CASE("asymptotic amplitude basics") {
    CHECK(std::abs(joint_amplitude_asymptotic(3, {0.0, 0.0, 0.5}, 2.0).value) == 0.0);
    for (int k : {1, 4}) {
        auto a = joint_amplitude_asymptotic(k, {2.5, 0.3, 0.8}, 2.0);
        auto b = joint_amplitude_asymptotic(-k, {2.5, 0.3, 0.8}, 2.0);
        CHECK(std::abs(a.value) == Approx(std::abs(b.value)).epsilon(1e-12));
        CHECK(a.has_error_tag);
    }
    // amplitude density bound
    for (double x : {0.5, 2.0, 6.0})
        for (double th : {0.0, 1.0})
            CHECK(std::abs(joint_amplitude_asymptotic(0, {x, 0.0, th}, 2.0).value) <=
                  1.0 / std::sqrt(M_PI) + 1e-12);
}

TEST_CASE("exact amplitude limits") {
    // b = 0, k = 0 decouples to the free packet
    for (double x : {0.0, 1.2, 3.0}) {
        DetectionPoint p{x, 0.0, 0.6};
        Complex e = joint_amplitude_exact(0, 20, p, 0.0).value;
        CHECK(std::abs(e - packet_factor(p, 0.0)) < 1e-14);
    }
    CHECK_THROWS_AS(joint_amplitude_exact(-7, 5, DetectionPoint{1.0, 0.0, 0.0}, 0.1),
                    std::domain_error);
}

TEST_CASE("exact amplitude matches the quadrature oracle") {
    DetectionPoint p{2.0, 0.0, 0.0};
    double b = 2.0 / (2.0 * std::sqrt(20.0));
    for (int k : {0, 1, -1, 3}) {
        Complex e = joint_amplitude_exact(k, 20, p, b).value;
        Complex q = phel::oracle::quad_joint_amplitude(k, 20, p, b);
        CHECK(std::abs(e - q) < 1e-8);
    }
}

TEST_CASE("exact converges to asymptotic") {
    DetectionPoint p{2.0, 0.5, 0.5};
    double prev = 1e9;
    for (long n0 : {100L, 1000L, 10000L}) {
        double b = 2.0 / (2.0 * std::sqrt(double(n0)));
        double d = 0.0;
        for (int k = -3; k <= 3; ++k)
            d = std::max(d, std::abs(joint_amplitude_exact(k, n0, p, b).value -
                                     joint_amplitude_asymptotic(k, p, 2.0).value));
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < 1e-4);
}

TEST_CASE("xi coefficients") {
    auto xi0 = xi_coefficients({0.0, 0.0, 0.3}, 2.0, -5, 5);
    for (int k = -5; k <= 5; ++k)
        if (k != 0) CHECK(std::abs(xi0.coefficients[std::size_t(k + 5)]) == 0.0);
    CHECK(std::abs(xi0.coefficients[5]) > 0.0);

    auto xi = xi_coefficients({2.0, 0.0, 0.0}, 2.0);
    CHECK(xi.tail_ok);
    // theta = 0 coefficients carry the Jackiw functional form |I_k(gamma)|
    Complex g = gamma_of({2.0, 0.0, 0.0}, 2.0);
    double kp2 = 0.0;
    for (auto c : xi.coefficients) kp2 += std::norm(c);
    CHECK(kp2 == Approx(xi.photon_norm_sq).epsilon(1e-12));
    int k0 = -xi.k_min;
    CHECK(std::abs(xi.coefficients[std::size_t(k0)]) ==
          Approx(std::abs(packet_factor({2.0, 0.0, 0.0}, 2.0) *
                          phel::specfun::bessel_i_int(0, g)))
              .epsilon(1e-12));
    CHECK(xi.kappa_prime > 0.0);
}

TEST_CASE("elastic channel dominance at drive 2, theta 0") {
    double best_x = 0.0, best = -1.0;
    for (double x = 0.0; x <= 6.0; x += 0.002) {
        double v = x * std::norm(joint_amplitude_asymptotic(0, {x, 0.0, 0.0}, 2.0).value);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    CHECK(best_x == Approx(2.0).epsilon(0.1));
    auto prob = [&](int k) {
        return std::norm(joint_amplitude_asymptotic(k, {best_x, 0.0, 0.0}, 2.0).value);
    };
    double p0 = prob(0), p1 = prob(1);
    for (int k = 2; k <= 8; ++k) {
        CHECK(p0 > prob(k));
        CHECK(p1 > prob(k));
    }
}

TEST_CASE("probability grid") {
    std::vector<double> xs{0.0, 1.0, 2.0}, ts{0.0, 0.5};
    auto z = joint_probability_grid(3, xs, ts, 0.0);
    for (double v : z) CHECK(v == 0.0);
    auto a = joint_probability_grid(2, xs, ts, 2.0);
    auto b = joint_probability_grid(-2, xs, ts, 2.0);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == Approx(b[i]).epsilon(1e-12));
    auto threaded = joint_probability_grid(2, xs, ts, 2.0, 3);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == threaded[i]);
    // row-major: entry (i,j) is x_i, theta_j
    DetectionPoint p{xs[2], 0.0, ts[1]};
    CHECK(a[2 * ts.size() + 1] ==
          Approx(std::norm(joint_amplitude_asymptotic(2, p, 2.0).value)).epsilon(1e-14));
}

TEST_CASE("classify_shape") {
    CHECK(classify_shape({5.0, 4.0, 3.0, 1.0, 0.5}) == Shape::monotonic);
    CHECK(classify_shape({1.0, 3.0, 1.0, 2.0, 0.1}) == Shape::oscillatory);
    // dip at k = 0 counts through the symmetric extension
    CHECK(classify_shape({1.0, 3.0, 2.0, 1.0, 0.5}) == Shape::oscillatory);
    auto profile = [](double s) {
        std::vector<double> prof;
        for (int k = 0; k <= 80; ++k)
            prof.push_back(std::norm(
                joint_amplitude_asymptotic(k, {10.0, 0.0, 10.0 * s}, 4.0).value));
        return prof;
    };
    CHECK(classify_shape(profile(0.3)) == Shape::monotonic);
    CHECK(classify_shape(profile(1.0)) == Shape::oscillatory);
}
