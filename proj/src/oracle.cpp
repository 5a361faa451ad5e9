#include "phel/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace phel::oracle {

using displacement::SigmaValue;
using specfun::laguerre;

double eigen_residual(const HamiltonianSpec& spec, long n0) {
    Complex sigma(-spec.coupling * spec.p_dimless[0],
                  spec.coupling * spec.p_dimless[1]);
    SigmaValue sv(sigma);
    int d = spec.n_max;
    if (n0 >= d) throw std::invalid_argument("eigen_residual: n0 >= n_max");
    std::vector<Complex> v(static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m)
        v[std::size_t(m)] = m - n0 >= -n0 ? displacement::element(int(m - n0), n0, sv)
                                          : Complex(0.0);
    double top_mass = 0.0;
    for (int m = d - 5; m < d; ++m) top_mass += std::norm(v[std::size_t(m)]);
    if (top_mass > 1e-16)
        throw std::runtime_error("eigen_residual: truncation band carries weight, inconclusive");
    // H v with H = diag(n) - sigma A+ - sigma* A, <m|A|m+1> = sqrt(m+1)
    std::vector<Complex> hv(static_cast<std::size_t>(d));
    for (int m = 0; m < d; ++m) {
        Complex acc = double(m) * v[std::size_t(m)];
        if (m > 0) acc -= sigma * std::sqrt(double(m)) * v[std::size_t(m - 1)];
        if (m + 1 < d) acc -= std::conj(sigma) * std::sqrt(double(m + 1)) * v[std::size_t(m + 1)];
        hv[std::size_t(m)] = acc;
    }
    double lambda = double(n0) - std::norm(sigma);
    double num = 0.0, den = 0.0;
    for (int m = 0; m < d; ++m) {
        num += std::norm(hv[std::size_t(m)] - lambda * v[std::size_t(m)]);
        den += std::norm(hv[std::size_t(m)]);
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

Complex quad_joint_amplitude(int k, long n0, const entangled::DetectionPoint& point,
                             double b) {
    long s = std::labs(long(k));
    if (k < -n0) throw std::domain_error("quad_joint_amplitude: k < -n0");
    Complex beta = 0.5 * Complex(1.0 + b * b, point.theta);
    double y = point.x;
    long lag_n = k >= 0 ? n0 : n0 - s;
    double log_ratio = 0.5 * specfun::log_ratio_factorials(lag_n, lag_n + s);
    auto f = [&](double x) -> Complex {
        double js = specfun::bessel_j(int(s), y * x);
        double lg = laguerre(lag_n, s, b * b * x * x);
        Complex damp = std::exp(-beta * x * x);
        return std::pow(x, double(s + 1)) * damp * js * lg;
    };
    auto r = quad::integrate_semi_infinite(f, 1e-12, 8.0, 1e-18);
    if (!r.converged) throw std::runtime_error("quad_joint_amplitude: quadrature failed");
    Complex phase(0.0, 0.0);
    switch (((k % 4) + 4) % 4) {
        case 0: phase = {1.0, 0.0}; break;
        case 1: phase = {0.0, -1.0}; break;
        case 2: phase = {-1.0, 0.0}; break;
        default: phase = {0.0, 1.0}; break;
    }
    Complex pref = phase * std::exp(Complex(0.0, -double(k) * point.phi)) / std::sqrt(M_PI);
    return pref * std::pow(b, double(s)) * std::exp(log_ratio) * r.value;
}

double quad_trace_purity(long n0, double b) {
    auto f = [&](double x) -> Complex {
        double lg = laguerre(n0, 0, b * b * x * x);
        return x * lg * lg * std::exp(-(b * b + 0.5) * x * x);
    };
    auto r = quad::integrate_semi_infinite(f, 1e-11, 8.0, 1e-19);
    if (!r.converged) throw std::runtime_error("quad_trace_purity: quadrature failed");
    return r.value.real();
}

density::PhotonDistribution sum_oracle_distribution(long n0, double b,
                                                    int k_min, int k_max) {
    if (k_min < -n0) k_min = int(-n0);
    density::PhotonDistribution d;
    d.kind = density::DistKind::exact;
    d.k_min = k_min;
    d.weights.assign(std::size_t(k_max - k_min + 1), 0.0);
    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        long s = std::labs(long(k));
        long n = k >= 0 ? n0 : n0 - s;
        double log_ratio = specfun::log_ratio_factorials(n, n + s);
        auto f = [&](double x) -> Complex {
            double lg = laguerre(n, s, b * b * x);
            return std::pow(x, double(s)) * std::exp(-(1.0 + b * b) * x) * lg * lg;
        };
        auto r = quad::integrate_semi_infinite(f, 1e-13, 8.0, 1e-19);
        if (!r.converged) throw std::runtime_error("sum_oracle_distribution: quadrature failed");
        double w = std::exp(2.0 * s * std::log(b) + log_ratio) * r.value.real();
        d.weights[std::size_t(k - k_min)] = w;
        sum += w;
    }
    d.norm_defect = std::abs(1.0 - sum);
    return d;
}

double sum_oracle_element_norm(long n0, const SigmaValue& sigma) {
    double sum = 0.0;
    int consecutive = 0;
    for (int k = int(-n0);; ++k) {
        double w = std::norm(displacement::element(k, n0, sigma));
        sum += w;
        if (k > 0 && w < 1e-18)
            ++consecutive;
        else
            consecutive = 0;
        if (consecutive >= 20) break;
        if (k - int(-n0) > 100000)
            throw std::runtime_error("sum_oracle_element_norm: tail did not close");
    }
    return sum;
}

std::pair<double, double> sum_oracle_mean_variance(long n0, const SigmaValue& sigma) {
    double sum = 0.0, m1 = 0.0, m2 = 0.0;
    int consecutive = 0;
    for (int k = int(-n0);; ++k) {
        double w = std::norm(displacement::element(k, n0, sigma));
        double m = double(n0) + k;
        sum += w;
        m1 += m * w;
        m2 += m * m * w;
        if (k > 0 && w < 1e-18)
            ++consecutive;
        else
            consecutive = 0;
        if (consecutive >= 20) break;
    }
    double mean = m1 / sum;
    return {mean, m2 / sum - mean * mean};
}

} // namespace phel::oracle
