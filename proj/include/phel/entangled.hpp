#pragma once

#include <vector>

#include "phel/specfun.hpp"

namespace phel::entangled {

using specfun::Complex;

struct DetectionPoint {
    double x = 0.0;     // r/w
    double phi = 0.0;   // radians
    double theta = 0.0; // t/tau
};

enum class Method { exact, asymptotic };

struct AmplitudeResult {
    Complex value;
    int k;
    Method method;
    bool has_error_tag; // true: O(n0^{-3/4})
};

struct BetaValue {
    Complex value; // (1 + i theta + b^2)/2
};

enum class Shape { monotonic, oscillatory };

Complex gamma_of(const DetectionPoint& point, double drive);

// psi_g(r,t) with the 1/w prefactor stripped
Complex packet_factor(const DetectionPoint& point, double drive);

AmplitudeResult joint_amplitude_asymptotic(int k, const DetectionPoint& point,
                                           double drive);

AmplitudeResult joint_amplitude_exact(int k, long n0, const DetectionPoint& point,
                                      double b);

// |k| <= ceil(|gamma|) + 40 + 10 ceil(sqrt(|gamma|+1))
int significant_k_band(Complex gamma);

struct XiExpansion {
    int k_min;
    std::vector<Complex> coefficients; // index i -> k = k_min + i
    double photon_norm_sq;             // sum |coeff|^2
    double kappa_prime;                // 1/sqrt(sum |I_{k}(gamma)|^2)
    bool tail_ok;                      // tail estimate below 1e-10
};

XiExpansion xi_coefficients(const DetectionPoint& point, double drive,
                            int k_min, int k_max);
XiExpansion xi_coefficients(const DetectionPoint& point, double drive);

// |joint_amplitude_asymptotic|^2, row-major: rows indexed by x, columns by
// theta.
std::vector<double> joint_probability_grid(int k, const std::vector<double>& x_grid,
                                           const std::vector<double>& theta_grid,
                                           double drive, int threads = 1);

Shape classify_shape(const std::vector<double>& k_profile);

} // namespace phel::entangled
