#include "phel/specfun.hpp"

#include <cmath>
#include <vector>

namespace phel::specfun {

namespace {

constexpr double kSeriesCutoffI = 8.0;
constexpr double kSeriesCutoffJ = 8.0;
constexpr double kRescaleThreshold = 1e250;

bool near_nonpositive_integer(double v) {
    return v < 0.5 && std::abs(v - std::round(v)) < 1e-12;
}

double reciprocal_gamma(double v) {
    if (v > 0.5) return std::exp(-std::lgamma(v));
    if (near_nonpositive_integer(v)) return 0.0;
    return std::sin(M_PI * v) / M_PI * std::tgamma(1.0 - v);
}

// I_s(z) power series with the (z/2)^s/s! prefactor kept in log domain.
LogScaled bessel_i_series_log(int s, Complex z) {
    if (z == Complex(0.0)) {
        if (s == 0) return {0.0, 1.0};
        return {0.0, 0.0};
    }
    Complex q = z * z * 0.25;
    Complex term = 1.0, sum = 1.0;
    for (int m = 1; m < 400; ++m) {
        term *= q / (double(m) * double(m + s));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    LogScaled pref{double(s) * std::log(std::abs(z) * 0.5) - std::lgamma(s + 1.0),
                   std::pow(z / std::abs(z), s)};
    return pref * LogScaled::from(sum);
}

// Miller downward recurrence for I_k, normalized by sum_n I_n(z) = e^z.
LogScaled bessel_i_miller_log(int s, Complex z) {
    double az = std::abs(z);
    int start = s + int(std::ceil(az)) + 40 + 10 * int(std::ceil(std::sqrt(az)));
    Complex fp = 0.0, fc = 1e-280, target = 0.0, acc = 0.0;
    for (int n = start; n >= 1; --n) {
        Complex fm = fp + (2.0 * n / z) * fc;
        fp = fc;
        fc = fm;
        if (n - 1 == s) target = fc;
        acc += 2.0 * fp; // fp now holds f_n for n >= 1
        if (std::abs(fc) > kRescaleThreshold) {
            fc /= kRescaleThreshold;
            fp /= kRescaleThreshold;
            target /= kRescaleThreshold;
            acc /= kRescaleThreshold;
        }
    }
    acc += fc; // f_0 term
    // I_s = target * e^z / acc, with e^z and scale offsets in log domain
    LogScaled t = LogScaled::from(target);
    LogScaled a = LogScaled::from(acc);
    return {t.log_magnitude - a.log_magnitude + z.real(),
            t.phase / a.phase * std::polar(1.0, z.imag())};
}

double bessel_j_series(int s, double x) {
    double q = -x * x * 0.25;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 200; ++m) {
        term *= q / (double(m) * double(m + s));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum * std::exp(double(s) * std::log(x * 0.5) - std::lgamma(s + 1.0));
}

// Miller recurrence for J_s, normalized by J_0 + 2*sum J_{2n} = 1.
double bessel_j_miller(int s, double x) {
    double ax = std::abs(x);
    int start = s + int(std::ceil(ax)) + 40 + 10 * int(std::ceil(std::sqrt(ax)));
    if (start % 2) ++start;
    double fp = 0.0, fc = 1e-280, target = 0.0, acc = 0.0;
    for (int n = start; n >= 1; --n) {
        double fm = (2.0 * n / x) * fc - fp;
        fp = fc;
        fc = fm;
        if (n - 1 == s) target = fc;
        if (n % 2 == 0) acc += 2.0 * fp;
        if (std::abs(fc) > kRescaleThreshold) {
            fc /= kRescaleThreshold;
            fp /= kRescaleThreshold;
            target /= kRescaleThreshold;
            acc /= kRescaleThreshold;
        }
    }
    acc += fc;
    return target / acc;
}

template <typename T>
T laguerre_impl(long n, long s, T x) {
    if (n == 0) return T(1);
    T lm = T(1);
    T lc = T(1) + T(double(s)) - x;
    for (long j = 1; j < n; ++j) {
        T ln = ((T(double(2 * j + 1 + s)) - x) * lc - T(double(j + s)) * lm) / T(double(j + 1));
        lm = lc;
        lc = ln;
    }
    return lc;
}

} // namespace

Complex bessel_i_int(int k, Complex z) {
    LogScaled r = bessel_i_int_log(k, z);
    if (r.is_zero()) return 0.0;
    if (r.log_magnitude > 709.0)
        throw std::range_error("bessel_i_int overflow; use bessel_i_int_log");
    return r.value();
}

LogScaled bessel_i_int_log(int k, Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("bessel_i_int: non-finite argument");
    int s = std::abs(k);
    if (std::abs(z) <= kSeriesCutoffI) return bessel_i_series_log(s, z);
    return bessel_i_miller_log(s, z);
}

double bessel_i_real_order(double nu, double x) {
    if (!(x > 0.0)) {
        if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
        throw std::invalid_argument("bessel_i_real_order: x must be > 0");
    }
    double lx = std::log(x * 0.5);
    double q = x * x * 0.25;
    double sum = 0.0;
    double pow_m = 1.0; // (x^2/4)^m
    for (int m = 0; m < 500; ++m) {
        double rg = reciprocal_gamma(m + nu + 1.0);
        double term = pow_m * std::exp(-std::lgamma(m + 1.0)) * rg;
        sum += term;
        if (m > 2 && std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300) && q < m) break;
        pow_m *= q;
    }
    return sum * std::exp(nu * lx);
}

double bessel_j(int k, double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("bessel_j: non-finite argument");
    int s = std::abs(k);
    double sign = 1.0;
    if (k < 0 && s % 2) sign = -sign;
    if (x < 0 && s % 2) sign = -sign;
    double ax = std::abs(x);
    if (ax == 0.0) return s == 0 ? 1.0 : 0.0;
    if (ax <= kSeriesCutoffJ) return sign * bessel_j_series(s, ax);
    return sign * bessel_j_miller(s, ax);
}

double laguerre(long n, long s, double x) {
    if (n > 10000) return double(laguerre_impl<long double>(n, s, x));
    return laguerre_impl<double>(n, s, x);
}

std::complex<double> laguerre_c(long n, long s, Complex x) {
    return laguerre_impl<std::complex<double>>(n, s, x);
}

LogScaled laguerre_c_log(long n, long s, Complex x) {
    if (n == 0) return {0.0, 1.0};
    Complex lm = 1.0;
    Complex lc = 1.0 + double(s) - x;
    double log_offset = 0.0;
    for (long j = 1; j < n; ++j) {
        Complex ln = ((double(2 * j + 1 + s) - x) * lc - double(j + s) * lm) / double(j + 1);
        lm = lc;
        lc = ln;
        double m = std::max(std::abs(lc), std::abs(lm));
        if (m > 1e250) {
            lc /= m;
            lm /= m;
            log_offset += std::log(m);
        }
    }
    LogScaled r = LogScaled::from(lc);
    r.log_magnitude += log_offset;
    return r;
}

namespace {

// P_n^{(a,0)} recurrence with optional rescaling, long double accumulation
// for large n.
template <bool Scaled>
LogScaled jacobi_impl(long n, long a, double x) {
    if (n == 0) return {0.0, 1.0};
    long double xl = x;
    long double pm = 1.0L;
    long double pc = ((a + 2.0L) * xl + a) / 2.0L;
    long double log_offset = 0.0L;
    for (long j = 1; j < n; ++j) {
        long double c1 = 2.0L * (j + 1) * (j + a + 1) * (2 * j + a);
        long double c2 = (2 * j + a + 1) * ((2.0L * j + a + 2) * (2 * j + a) * xl + (long double)(a) * a);
        long double c3 = 2.0L * (j + a) * j * (2 * j + a + 2);
        long double pn = (c2 * pc - c3 * pm) / c1;
        pm = pc;
        pc = pn;
        if (Scaled) {
            long double m = std::max(fabsl(pc), fabsl(pm));
            if (m > 1e280L) {
                pc /= m;
                pm /= m;
                log_offset += logl(m);
            }
        }
    }
    double v = double(pc);
    LogScaled r = LogScaled::from(Complex(v));
    r.log_magnitude += double(log_offset);
    return r;
}

} // namespace

double jacobi_p(long n, long alpha, double x) {
    return jacobi_impl<false>(n, alpha, x).real_value();
}

LogScaled jacobi_p_log(long n, long alpha, double x) {
    return jacobi_impl<true>(n, alpha, x);
}

double legendre_p(long n, double x) { return jacobi_p(n, 0, x); }

LogScaled legendre_p_log(long n, double x) { return jacobi_p_log(n, 0, x); }

double log_gamma(double x) {
    if (x <= 0.0 && x == std::round(x))
        throw std::domain_error("log_gamma: non-positive integer argument");
    return std::lgamma(x);
}

double log_ratio_factorials(long n, long m) {
    if (n < 0 || m < 0) throw std::domain_error("log_ratio_factorials: negative argument");
    if (std::labs(n - m) <= 64) {
        double r = 0.0;
        for (long j = std::min(n, m) + 1; j <= std::max(n, m); ++j) r += std::log(double(j));
        return n >= m ? r : -r;
    }
    return std::lgamma(n + 1.0) - std::lgamma(m + 1.0);
}

} // namespace phel::specfun
