#pragma once

#include <complex>
#include <stdexcept>

namespace phel::specfun {

using Complex = std::complex<double>;

// value = phase * exp(log_magnitude), |phase| == 1 (or 0 for an exact zero)
struct LogScaled {
    double log_magnitude = 0.0;
    Complex phase = 1.0;

    Complex value() const {
        if (phase == Complex(0.0)) return 0.0;
        return phase * std::exp(log_magnitude);
    }
    double real_value() const { return value().real(); }
    bool is_zero() const { return phase == Complex(0.0); }

    static LogScaled from(Complex v) {
        double m = std::abs(v);
        if (m == 0.0) return {0.0, 0.0};
        return {std::log(m), v / m};
    }
    LogScaled operator*(const LogScaled& o) const {
        if (is_zero() || o.is_zero()) return {0.0, 0.0};
        return {log_magnitude + o.log_magnitude, phase * o.phase};
    }
};

// Modified Bessel function I_k of integer order, complex argument.
// Throws std::range_error when the result magnitude overflows double;
// use bessel_i_int_log in that regime.
Complex bessel_i_int(int k, Complex z);
LogScaled bessel_i_int_log(int k, Complex z);

// I_nu for real (possibly negative non-integer) order, x > 0, via the
// defining power series.
double bessel_i_real_order(double nu, double x);

double bessel_j(int k, double x);

double laguerre(long n, long s, double x);
std::complex<double> laguerre_c(long n, long s, Complex x);
LogScaled laguerre_c_log(long n, long s, Complex x);

// Jacobi P_n^{(alpha,0)}; legendre_p is the alpha = 0 case.
double jacobi_p(long n, long alpha, double x);
LogScaled jacobi_p_log(long n, long alpha, double x);
double legendre_p(long n, double x);
LogScaled legendre_p_log(long n, double x);

double log_gamma(double x);
// log(n!/m!)
double log_ratio_factorials(long n, long m);

} // namespace phel::specfun
