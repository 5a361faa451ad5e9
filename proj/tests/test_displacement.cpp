#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "phel/displacement.hpp"
#include "phel/oracle.hpp"

using namespace phel::displacement;
using phel::specfun::Complex;
using doctest::Approx;

TEST_CASE("sigma = 0 gives the identity") {
    SigmaValue s(0.0);
    CHECK(std::abs(element(0, 7, s) - 1.0) == 0.0);
    CHECK(std::abs(element(3, 7, s)) == 0.0);
}

TEST_CASE("n = 0 reduces to the coherent-state amplitude") {
    SigmaValue s(Complex(0.6, -0.4));
    for (int k = 0; k <= 6; ++k) {
        Complex expect = std::pow(s.value, k) *
                         std::exp(-0.5 * s.magnitude * s.magnitude) /
                         std::sqrt(std::tgamma(k + 1.0));
        CHECK(std::abs(element(k, 0, s) - expect) < 1e-14);
    }
}

TEST_CASE("unitarity") {
    for (auto [n0, m] : {std::pair<long, double>{5, 0.7}, {50, 2.0}, {100, 5.0}}) {
        SigmaValue s(Complex(m * 0.8, -m * 0.6));
        CHECK(phel::oracle::sum_oracle_element_norm(n0, s) == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("domain error below the bottom state") {
    SigmaValue s(Complex(0.5, 0.0));
    CHECK_THROWS_AS(element(-4, 3, s), std::domain_error);
}

TEST_CASE("hermiticity relation") {
    SigmaValue s(Complex(0.4, 0.9));
    SigmaValue ms(-s.value);
    for (long n : {2L, 8L, 20L})
        for (int k = -2; k <= 4; ++k) {
            if (k < -n) continue;
            Complex lhs = element(k, n, s);
            Complex rhs = std::conj(element(-k, n + k, ms));
            CHECK(std::abs(lhs - rhs) < 1e-13);
        }
}

TEST_CASE("mean and variance against the summation oracle") {
    SigmaValue s(Complex(std::sqrt(0.5), 0.0));
    auto [mean, var] = mean_variance(3, s);
    CHECK(mean == Approx(3.5).epsilon(1e-14));
    CHECK(var == Approx(3.5).epsilon(1e-14));
    auto [om, ov] = phel::oracle::sum_oracle_mean_variance(3, s);
    CHECK(om == Approx(mean).epsilon(1e-10));
    CHECK(ov == Approx(var).epsilon(1e-10));
}

TEST_CASE("asymptotic element converges at the Hilb rate") {
    const double arg = 3.0; // 2 sqrt(n0) |sigma| held fixed
    double prev = 1e9;
    std::vector<double> devs;
    for (long n0 : {100L, 1000L, 10000L, 100000L}) {
        double mag = arg / (2.0 * std::sqrt(double(n0)));
        SigmaValue s(Complex(-mag, 0.0));
        double d = 0.0;
        for (int k = 0; k <= 10; ++k)
            d = std::max(d, std::abs(element(k, n0, s) - element_asymptotic(k, n0, s)));
        CHECK(d < prev);
        prev = d;
        devs.push_back(d);
    }
    double slope = std::log(devs.back() / devs.front()) /
                   std::log(100000.0 / 100.0);
    CHECK(slope == Approx(-0.75).epsilon(0.34)); // within +-0.25 absolute
    CHECK(slope <= -0.5);
    CHECK(slope >= -1.0);
}

TEST_CASE("asymptotic element phase factor") {
    SigmaValue s(Complex(0.0, 0.02));
    SigmaValue flipped(-s.value);
    for (int k : {1, 3}) {
        Complex a = element_asymptotic(k, 10000, s);
        Complex b = element_asymptotic(k, 10000, flipped);
        CHECK(std::abs(a + b) < 1e-14);
    }
}

TEST_CASE("overlap product") {
    SigmaValue s1(Complex(0.7, 0.2)), s2(Complex(-0.1, 0.5));
    CHECK(std::abs(overlap_product(12, s1, s1) - 1.0) < 1e-13);
    CHECK(std::abs(overlap_product(12, s1, SigmaValue(0.0)) - element(0, 12, s1)) < 1e-13);
    // completeness-sum oracle
    for (long n0 : {4L, 17L, 30L}) {
        Complex acc = 0.0;
        for (long m = 0; m <= n0 + 80; ++m)
            acc += std::conj(element(int(m - n0), n0, s2)) * element(int(m - n0), n0, s1);
        CHECK(std::abs(acc - overlap_product(n0, s1, s2)) < 1e-10);
    }
}
