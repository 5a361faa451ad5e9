#include "phel/density.hpp"

#include <cmath>
#include <stdexcept>

#include "phel/specfun.hpp"

namespace phel::density {

using specfun::LogScaled;

double PhotonDistribution::at(int k) const {
    int i = k - k_min;
    if (i < 0 || std::size_t(i) >= weights.size()) return 0.0;
    return weights[std::size_t(i)];
}

double photon_weight_exact(int k, long n0, double b) {
    if (b == 1.0) throw std::domain_error("photon_weight_exact: b = 1 is singular");
    if (!(b > 0.0)) throw std::domain_error("photon_weight_exact: b must be > 0");
    if (k < -n0) throw std::domain_error("photon_weight_exact: k < -n0");
    long s = std::labs(long(k));
    long n = k >= 0 ? n0 : n0 - s;
    double b2 = b * b;
    double arg = (1.0 + b2 * b2) / (1.0 - b2 * b2);
    LogScaled jac = specfun::jacobi_p_log(n, s, arg);
    double ratio = (1.0 - b2) / (1.0 + b2); // sign compensated by the Jacobi value
    double log_w = 2.0 * s * std::log(b) + double(n) * std::log(std::abs(ratio)) -
                   double(s + 1) * std::log1p(b2) + jac.log_magnitude;
    double sign = jac.phase.real() * (ratio < 0.0 && (n % 2) ? -1.0 : 1.0);
    double w = sign * std::exp(log_w);
    if (w < 0.0) throw std::runtime_error("photon_weight_exact: negative weight");
    return w;
}

PhotonDistribution photon_dist_exact(long n0, double b) {
    PhotonDistribution d;
    d.kind = DistKind::exact;
    int half = 20;
    for (int attempt = 0; attempt < 12; ++attempt) {
        int kmin = int(std::max<long>(-n0, -half));
        int kmax = half;
        d.k_min = kmin;
        d.weights.assign(std::size_t(kmax - kmin + 1), 0.0);
        double sum = 0.0;
        for (int k = kmin; k <= kmax; ++k) {
            double w = photon_weight_exact(k, n0, b);
            d.weights[std::size_t(k - kmin)] = w;
            sum += w;
        }
        d.norm_defect = std::abs(1.0 - sum);
        if (d.norm_defect < 1e-10) return d;
        half *= 2;
    }
    throw std::runtime_error("photon_dist_exact: normalization defect persists");
}

PhotonDistribution photon_dist_asymptotic(double q, int k_max) {
    if (q < 0.0) throw std::domain_error("photon_dist_asymptotic: q must be >= 0");
    PhotonDistribution d;
    d.kind = DistKind::asymptotic;
    d.k_min = -k_max;
    d.weights.assign(std::size_t(2 * k_max + 1), 0.0);
    double sum = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        LogScaled ik = specfun::bessel_i_int_log(k, q);
        double w = ik.is_zero() ? 0.0 : std::exp(ik.log_magnitude - q);
        d.weights[std::size_t(k_max + k)] = w;
        d.weights[std::size_t(k_max - k)] = w;
        sum += k == 0 ? w : 2.0 * w;
    }
    d.norm_defect = std::abs(1.0 - sum);
    return d;
}

namespace {

int asymptotic_band(double q) {
    return int(std::ceil(q)) + 40 + 10 * int(std::ceil(std::sqrt(q + 1.0)));
}

} // namespace

PhotonDistribution photon_dist_asymptotic(double q) {
    return photon_dist_asymptotic(q, asymptotic_band(q));
}

double von_neumann_photon(double q) {
    if (q < 0.0) throw std::domain_error("von_neumann_photon: q must be >= 0");
    if (q == 0.0) return 0.0;
    double brace = 0.0;
    int band = asymptotic_band(q);
    for (int k = 0; k <= band; ++k) {
        LogScaled ik = specfun::bessel_i_int_log(k, q);
        if (ik.is_zero()) break;
        double term = std::exp(ik.log_magnitude - q) * ik.log_magnitude;
        brace += k == 0 ? term : 2.0 * term;
        if (k > q && std::abs(term) < 1e-18 * std::abs(brace)) break;
    }
    return q - brace;
}

double linear_entropy_photon(double q) {
    if (q < 0.0) throw std::domain_error("linear_entropy_photon: q must be >= 0");
    LogScaled i0 = specfun::bessel_i_int_log(0, 2.0 * q);
    return 1.0 - std::exp(i0.log_magnitude - 2.0 * q);
}

double linear_entropy_electron_exact(long n0, double b) {
    if (n0 < 1) throw std::domain_error("linear_entropy_electron_exact: n0 must be >= 1");
    if (!(b > 0.0)) throw std::domain_error("linear_entropy_electron_exact: b must be > 0");
    double u = 1.0 / (2.0 * b * b);
    if (u == 1.0) throw std::domain_error("linear_entropy_electron_exact: 2b^2 = 1 is singular");
    double arg = (u * u + 1.0) / (u * u - 1.0);
    LogScaled leg = specfun::legendre_p_log(n0, arg);
    // purity = u (u-1)^{n0} / (u+1)^{n0+1} * P_{n0}(arg)
    double log_p = std::log(u) +
                   double(n0) * std::log(std::abs((u - 1.0) / (u + 1.0))) -
                   std::log(u + 1.0) + leg.log_magnitude;
    double sign = leg.phase.real() * ((u < 1.0 && n0 % 2) ? -1.0 : 1.0);
    double purity = sign * std::exp(log_p);
    if (!(purity > 0.0 && purity <= 1.0 + 1e-9))
        throw std::runtime_error("linear_entropy_electron_exact: purity outside (0,1]");
    return 1.0 - std::min(purity, 1.0);
}

Complex electron_momentum_density(const Vec2& k1, const Vec2& k2, long n0,
                                  double b, double theta) {
    auto sigma = [b](const Vec2& k) { return Complex(-b * k[0], b * k[1]); };
    double x1 = k1[0] * k1[0] + k1[1] * k1[1];
    double x2 = k2[0] * k2[0] + k2[1] * k2[1];
    Complex g = std::exp(Complex(-0.5 * (x1 + x2), -0.5 * theta * (x1 - x2))) / M_PI;
    Complex s1 = sigma(k1), s2 = sigma(k2);
    Complex sd = sigma({k1[0] - k2[0], k1[1] - k2[1]});
    double sd2 = std::norm(sd);
    Complex phase = std::exp(Complex(0.0, std::imag(s1 * std::conj(s2))));
    return g * phase * specfun::laguerre(n0, 0, sd2) * std::exp(-0.5 * sd2);
}

Complex electron_position_density(double x1, double x2, double theta, double drive) {
    double den = 1.0 + theta * theta;
    Complex num(x2 * x2 + x1 * x1, theta * (x2 * x2 - x1 * x1));
    Complex iarg = drive * Complex(x2 + x1, theta * (x2 - x1)) / den;
    Complex i0 = specfun::bessel_i_int(0, iarg);
    return std::exp(-drive * drive / den) * std::exp(-num / (2.0 * den)) * i0 /
           (M_PI * den);
}

double position_distribution(double x, double theta, double drive) {
    return electron_position_density(x, x, theta, drive).real();
}

EntropyReport entropy_report(double q, std::optional<long> n0,
                             std::optional<double> b) {
    if (q < 0.0) throw std::domain_error("entropy_report: q must be >= 0");
    EntropyReport r{};
    r.von_neumann = von_neumann_photon(q);
    r.linear = linear_entropy_photon(q);
    r.renyi2 = -std::log1p(-r.linear);
    r.schmidt_number = 1.0 / (1.0 - r.linear);
    if (n0 && b) r.electron_linear_exact = linear_entropy_electron_exact(*n0, *b);
    return r;
}

} // namespace phel::density
