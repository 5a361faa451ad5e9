#pragma once

#include <complex>
#include <functional>

namespace phel::quad {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct Result {
    Complex value;
    double error_estimate;
    bool converged;
};

// Adaptive Gauss-Kronrod (G7,K15) bisection on [a, b], absolute tolerance.
Result integrate(const Integrand& f, double a, double b, double abs_tol,
                 int max_depth = 40);

// Semi-infinite [0, inf): truncated at R where |f| stays below cutoff,
// then integrated adaptively.
Result integrate_semi_infinite(const Integrand& f, double abs_tol,
                               double r_initial = 10.0, double cutoff = 1e-20);

} // namespace phel::quad
