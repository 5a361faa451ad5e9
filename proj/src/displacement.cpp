#include "phel/displacement.hpp"

#include <cmath>
#include <stdexcept>

namespace phel::displacement {

using specfun::laguerre;
using specfun::log_ratio_factorials;

Complex element(int k, long n, const SigmaValue& sigma) {
    if (n < 0) throw std::domain_error("element: n must be >= 0");
    if (k < -n) throw std::domain_error("element: k < -n, state does not exist");
    double s2 = sigma.magnitude * sigma.magnitude;
    if (sigma.magnitude == 0.0) return k == 0 ? 1.0 : 0.0;
    long s = std::labs(long(k));
    Complex base = k >= 0 ? sigma.value : -std::conj(sigma.value);
    long lag_n = k >= 0 ? n : n - s;
    // sqrt(lag_n!/(lag_n+s)!) e^{-|sigma|^2/2} base^s, in log domain
    double log_mag = 0.5 * log_ratio_factorials(lag_n, lag_n + s) - 0.5 * s2 +
                     s * std::log(sigma.magnitude);
    Complex phase = s == 0 ? Complex(1.0) : std::pow(base / sigma.magnitude, double(s));
    return phase * std::exp(log_mag) * laguerre(lag_n, s, s2);
}

Complex element_asymptotic(int k, long n0, const SigmaValue& sigma) {
    if (n0 < 1) throw std::domain_error("element_asymptotic: n0 must be >= 1");
    double j = specfun::bessel_j(k, 2.0 * std::sqrt(double(n0)) * sigma.magnitude);
    if (sigma.magnitude == 0.0) return k == 0 ? 1.0 : 0.0;
    Complex unit = sigma.value / sigma.magnitude;
    return std::pow(unit, double(k)) * j;
}

std::pair<double, double> mean_variance(long n0, const SigmaValue& sigma) {
    double s2 = sigma.magnitude * sigma.magnitude;
    return {double(n0) + s2, (2.0 * n0 + 1.0) * s2};
}

Complex overlap_product(long n0, const SigmaValue& sigma1, const SigmaValue& sigma2) {
    Complex d = sigma1.value - sigma2.value;
    double d2 = std::norm(d);
    Complex phase = std::exp(Complex(0.0, std::imag(std::conj(sigma2.value) * sigma1.value)));
    return phase * laguerre(n0, 0, d2) * std::exp(-0.5 * d2);
}

} // namespace phel::displacement
