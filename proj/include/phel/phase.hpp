#pragma once

#include <Eigen/Dense>
#include <complex>

#include "phel/entangled.hpp"

namespace phel::phase {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

struct FockState {
    Vector coefficients;
    int dim() const { return int(coefficients.size()); }
    void normalize();
};

struct FockOperator {
    Matrix entries;
    bool hermitian = false;
    int dim() const { return int(entries.rows()); }
};

struct JackiwParams {
    double gamma;
    double nu;
    int branch;
};

struct Operators {
    FockOperator N, E, C, S, P0;
};

Operators build_operators(int dim);

Complex expectation(const FockOperator& op, const FockState& state);
double variance(const FockOperator& op, const FockState& state);

double uncertainty_u1(const FockState& state);
double uncertainty_u2(const FockState& state);

// Root of I_{-(nu+1)}(gamma) = 0 in (2s, 2s+1); smallest root when the
// branch interval holds more than one. Throws if no sign change is found.
double find_nu(double gamma, int branch);

std::pair<FockState, JackiwParams> jackiw_state(double gamma, int branch, int dim);
int default_jackiw_dim(double gamma, double nu);

FockState xi_photon_part(const entangled::DetectionPoint& point, double drive,
                         long n0, int dim);

} // namespace phel::phase
