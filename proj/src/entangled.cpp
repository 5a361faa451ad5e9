#include "phel/entangled.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace phel::entangled {

using specfun::LogScaled;

namespace {

const double kSqrtPi = std::sqrt(M_PI);

Complex ik_phase(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, -1.0}; // (-i)^1
        case 2: return {-1.0, 0.0};
        default: return {0.0, 1.0};
    }
}

} // namespace

Complex gamma_of(const DetectionPoint& point, double drive) {
    return drive * point.x / Complex(1.0, point.theta);
}

Complex packet_factor(const DetectionPoint& point, double drive) {
    Complex den(1.0, point.theta);
    Complex arg = -(drive * drive + point.x * point.x) / (2.0 * den);
    return std::exp(arg) / (kSqrtPi * den);
}

AmplitudeResult joint_amplitude_asymptotic(int k, const DetectionPoint& point,
                                           double drive) {
    Complex den(1.0, point.theta);
    Complex g = gamma_of(point, drive);
    LogScaled ik = specfun::bessel_i_int_log(k, g);
    LogScaled pf = LogScaled::from(1.0 / (kSqrtPi * den));
    LogScaled expo{(-(drive * drive + point.x * point.x) / (2.0 * den)).real(),
                   std::exp(Complex(0.0, (-(drive * drive + point.x * point.x) /
                                          (2.0 * den)).imag()))};
    LogScaled total = ik * pf * expo;
    Complex phase = ik_phase(k) * std::exp(Complex(0.0, -double(k) * point.phi));
    return {phase * total.value(), k, Method::asymptotic, true};
}

AmplitudeResult joint_amplitude_exact(int k, long n0, const DetectionPoint& point,
                                      double b) {
    long s = std::labs(long(k));
    if (k < -n0) throw std::domain_error("joint_amplitude_exact: k < -n0");
    Complex beta = 0.5 * Complex(1.0 + b * b, point.theta);
    double y = point.x;
    long pow_n = k >= 0 ? n0 : n0 - s;
    long lag_n = pow_n;

    // all magnitude factors of Eq. A.7 accumulated in log domain
    LogScaled acc = LogScaled::from(1.0 / (kSqrtPi * 2.0 * beta));
    if (s > 0) {
        if (y == 0.0 || b == 0.0) return {0.0, k, Method::exact, false};
        Complex byb = b * y / (2.0 * beta);
        acc = acc * LogScaled{double(s) * std::log(std::abs(byb)),
                              std::pow(byb / std::abs(byb), double(s))};
    }
    Complex e = -y * y / (4.0 * beta);
    acc = acc * LogScaled{e.real(), std::exp(Complex(0.0, e.imag()))};
    acc = acc * LogScaled{0.5 * specfun::log_ratio_factorials(lag_n, lag_n + s), 1.0};
    if (b != 0.0) {
        Complex base = 1.0 - b * b / beta;
        acc = acc * LogScaled{double(pow_n) * std::log(std::abs(base)),
                              std::exp(Complex(0.0, double(pow_n) * std::arg(base)))};
        Complex lag_arg = b * b * y * y / (4.0 * beta * (b * b - beta));
        acc = acc * specfun::laguerre_c_log(lag_n, s, lag_arg);
    }
    Complex phase = ik_phase(k) * std::exp(Complex(0.0, -double(k) * point.phi));
    return {phase * acc.value(), k, Method::exact, false};
}

int significant_k_band(Complex gamma) {
    double a = std::abs(gamma);
    return int(std::ceil(a)) + 40 + 10 * int(std::ceil(std::sqrt(a + 1.0)));
}

XiExpansion xi_coefficients(const DetectionPoint& point, double drive,
                            int k_min, int k_max) {
    if (k_min > k_max) throw std::invalid_argument("xi_coefficients: empty range");
    Complex g = gamma_of(point, drive);
    Complex pf = packet_factor(point, drive);
    XiExpansion out;
    out.k_min = k_min;
    out.coefficients.reserve(k_max - k_min + 1);
    double bessel_norm = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        Complex ik = specfun::bessel_i_int(k, g);
        bessel_norm += std::norm(ik);
        Complex phase = ik_phase(k) * std::exp(Complex(0.0, -double(k) * point.phi));
        out.coefficients.push_back(pf * phase * ik);
    }
    out.photon_norm_sq = std::norm(pf) * bessel_norm;
    out.kappa_prime = bessel_norm > 0.0 ? 1.0 / std::sqrt(bessel_norm) : 0.0;
    double tail = std::norm(specfun::bessel_i_int(k_max + 1, g)) +
                  std::norm(specfun::bessel_i_int(k_min - 1, g));
    out.tail_ok = tail <= 1e-10 * std::max(bessel_norm, 1e-300);
    return out;
}

XiExpansion xi_coefficients(const DetectionPoint& point, double drive) {
    int band = significant_k_band(gamma_of(point, drive));
    return xi_coefficients(point, drive, -band, band);
}

std::vector<double> joint_probability_grid(int k, const std::vector<double>& x_grid,
                                           const std::vector<double>& theta_grid,
                                           double drive, int threads) {
    std::size_t nx = x_grid.size(), nt = theta_grid.size();
    std::vector<double> out(nx * nt);
    auto row_range = [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i)
            for (std::size_t j = 0; j < nt; ++j) {
                DetectionPoint p{x_grid[i], 0.0, theta_grid[j]};
                out[i * nt + j] = std::norm(joint_amplitude_asymptotic(k, p, drive).value);
            }
    };
    if (threads <= 1 || nx < 2) {
        row_range(0, nx);
        return out;
    }
    std::size_t nthreads = std::min<std::size_t>(threads, nx);
    std::vector<std::thread> pool;
    std::size_t chunk = (nx + nthreads - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        std::size_t i0 = t * chunk, i1 = std::min(nx, i0 + chunk);
        if (i0 >= i1) break;
        pool.emplace_back(row_range, i0, i1);
    }
    for (auto& th : pool) th.join();
    return out;
}

Shape classify_shape(const std::vector<double>& k_profile) {
    if (k_profile.size() < 2) return Shape::monotonic;
    // symmetric extension: the k=0 bin is interior (profile continues to -k)
    std::vector<double> p;
    p.reserve(k_profile.size() + 1);
    p.push_back(k_profile[1]);
    p.insert(p.end(), k_profile.begin(), k_profile.end());
    double mx = 0.0;
    for (double v : p) mx = std::max(mx, v);
    double tol = 1e-12 * mx;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
        if (p[i] < p[i - 1] - tol && p[i] < p[i + 1] - tol) {
            for (std::size_t j = i + 1; j + 1 < p.size(); ++j)
                if (p[j] > p[j - 1] + tol && p[j] > p[j + 1] + tol)
                    return Shape::oscillatory;
        }
    }
    return Shape::monotonic;
}

} // namespace phel::entangled
