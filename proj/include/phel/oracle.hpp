#pragma once

#include "phel/density.hpp"
#include "phel/displacement.hpp"
#include "phel/entangled.hpp"
#include "phel/quadrature.hpp"

namespace phel::oracle {

using specfun::Complex;

struct HamiltonianSpec {
    int n_max;
    density::Vec2 p_dimless;
    double coupling;    // b-scale per-photon coupling
    double omega_ratio; // Omega/omega bundle (enters only via coupling here)
};

// Relative residual ||H v - E v|| / ||H v|| of the displaced-number
// eigenvector of the tridiagonal H = N - sigma A+ - sigma* A at fixed p.
double eigen_residual(const HamiltonianSpec& spec, long n0);

// Adaptive quadrature of the Eq. A.5 radial integral.
Complex quad_joint_amplitude(int k, long n0, const entangled::DetectionPoint& point,
                             double b);

// Tr Pe^2 via the separated radial integral.
double quad_trace_purity(long n0, double b);

// Photon distribution via direct quadrature of the reduced-density integrand.
density::PhotonDistribution sum_oracle_distribution(long n0, double b,
                                                    int k_min, int k_max);

// Brute-force checks on displacement elements.
double sum_oracle_element_norm(long n0, const displacement::SigmaValue& sigma);
std::pair<double, double> sum_oracle_mean_variance(long n0,
                                                   const displacement::SigmaValue& sigma);

} // namespace phel::oracle
