#include "phel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "phel/density.hpp"
#include "phel/displacement.hpp"
#include "phel/entangled.hpp"
#include "phel/oracle.hpp"
#include "phel/params.hpp"
#include "phel/phase.hpp"
#include "phel/quadrature.hpp"
#include "phel/specfun.hpp"

namespace phel::verify {

namespace {

using specfun::Complex;

Check make(std::string name, double tol, double dev, std::string note = "") {
    bool pass = dev <= tol;
    return {std::move(name), tol, dev, pass, std::move(note)};
}

std::vector<Check> criterion1() {
    std::vector<Check> out;
    for (const auto& row : params::kTableB1) {
        params::PhysicalConfig cfg;
        cfg.photon_energy_eV = row.photon_energy_eV;
        cfg.bandwidth_ratio = row.bandwidth_ratio;
        cfg.intensity_W_cm2 = 1.0;
        double coeff = params::mean_occupation(cfg);
        double dev = std::abs(coeff - row.tabulated_coefficient) / row.tabulated_coefficient;
        std::string note;
        if (std::string(row.name) == "Nd:Glass")
            note = "expected red: tabulated 6e-2 reproduced only by plugging the "
                   "wavelength 1.06 um instead of 1.17 eV into E_ph^4";
        out.push_back(make(std::string("table-b1/") + row.name, 0.15, dev, note));
    }
    return out;
}

std::vector<Check> criterion2() {
    std::vector<Check> out;
    const double qs[4] = {2.5, 5.0, 25.0, 50.0};
    const double is[4] = {1.25e12, 2.5e12, 12.5e12, 25e12};
    for (int i = 0; i < 4; ++i) {
        params::PhysicalConfig cfg;
        cfg.intensity_W_cm2 = is[i];
        double q = params::derive(cfg).q;
        std::ostringstream n;
        n << "q-mapping/I=" << is[i];
        out.push_back(make(n.str(), 1e-2, std::abs(q - qs[i]) / qs[i]));
    }
    return out;
}

double xi_norm_integral(double drive, double theta) {
    auto f = [&](double x) -> Complex {
        entangled::DetectionPoint p{x, 0.0, theta};
        auto xi = entangled::xi_coefficients(p, drive);
        return 2.0 * M_PI * x * xi.photon_norm_sq;
    };
    auto r = quad::integrate_semi_infinite(f, 1e-9, drive + 8.0, 1e-16);
    return r.value.real();
}

std::vector<Check> criterion3() {
    std::vector<Check> out;
    for (double q : {0.1, 1.0, 2.5, 5.0, 25.0, 50.0}) {
        auto d = density::photon_dist_asymptotic(q);
        std::ostringstream n;
        n << "norm/p_k-sum q=" << q;
        out.push_back(make(n.str(), 1e-12, d.norm_defect));
    }
    for (double drive : {0.5, 2.0, 4.0})
        for (double theta : {0.0, 0.5, 1.0, 3.0}) {
            double v = xi_norm_integral(drive, theta);
            std::ostringstream n;
            n << "norm/xi-integral drive=" << drive << " theta=" << theta;
            out.push_back(make(n.str(), 1e-6, std::abs(v - 1.0)));
        }
    for (double theta : {0.0, 1.0, 5.0}) {
        auto f = [&](double x) -> Complex {
            return 2.0 * M_PI * x * density::position_distribution(x, theta, 2.0);
        };
        auto r = quad::integrate_semi_infinite(f, 1e-9, 10.0, 1e-16);
        std::ostringstream n;
        n << "norm/position-density theta=" << theta;
        out.push_back(make(n.str(), 1e-6, std::abs(r.value.real() - 1.0)));
    }
    return out;
}

std::vector<Check> criterion4() {
    std::vector<Check> out;
    const double q = 2.0, drive = 2.0;
    double target = density::linear_entropy_photon(q);
    double prev = 1e300;
    bool monotone = true;
    double final_dev = 0.0;
    for (long n0 : {1000L, 10000L, 100000L, 1000000L}) {
        double b = drive / (2.0 * std::sqrt(double(n0)));
        double dev = std::abs(density::linear_entropy_electron_exact(n0, b) - target);
        // the Legendre recurrence floors out near 1e-6 at n0 = 1e6
        if (dev > prev && dev > 1e-5) monotone = false;
        prev = dev;
        final_dev = dev;
    }
    out.push_back(make("entropy-equality/n0=1e6 deviation", 1e-3, final_dev));
    out.push_back(make("entropy-equality/monotone trend", 0.5, monotone ? 0.0 : 1.0));
    // independent code paths for the asymptotic purity
    auto d = density::photon_dist_asymptotic(q);
    double purity_sum = 0.0;
    for (double w : d.weights) purity_sum += w * w;
    auto f = [&](double x) -> Complex {
        double j = specfun::bessel_j(0, drive * x);
        return x * j * j * std::exp(-0.5 * x * x);
    };
    auto r = quad::integrate_semi_infinite(f, 5e-14, 10.0, 1e-19);
    out.push_back(make("entropy-equality/purity cross-path", 1e-12,
                       std::abs(purity_sum - r.value.real())));
    return out;
}

std::vector<Check> criterion5() {
    std::vector<Check> out;
    double amp_dev = 0.0;
    for (long n0 : {10L, 20L, 50L})
        for (double x : {0.5, 2.0, 4.0})
            for (double theta : {0.0, 0.5, 2.0}) {
                double b = 2.0 / (2.0 * std::sqrt(double(n0)));
                entangled::DetectionPoint p{x, 0.4, theta};
                for (int k : {0, 1, -2, 5}) {
                    Complex e = entangled::joint_amplitude_exact(k, n0, p, b).value;
                    Complex q = oracle::quad_joint_amplitude(k, n0, p, b);
                    amp_dev = std::max(amp_dev, std::abs(e - q));
                }
            }
    out.push_back(make("consistency/amplitude-vs-quadrature", 1e-8, amp_dev));

    double dist_dev = 0.0;
    for (long n0 : {10L, 30L, 50L})
        for (double b : {0.3, 0.6, 1.4}) {
            auto oracle_d = oracle::sum_oracle_distribution(n0, b, -12, 12);
            for (int k = oracle_d.k_min; k <= 12; ++k)
                dist_dev = std::max(dist_dev,
                                    std::abs(oracle_d.at(k) -
                                             density::photon_weight_exact(k, n0, b)));
        }
    out.push_back(make("consistency/distribution-vs-quadrature", 1e-9, dist_dev));

    double pur_dev = 0.0;
    for (long n0 : {1L, 5L, 20L, 50L})
        for (double b : {0.25, 0.6, 1.3}) {
            double cf = 1.0 - density::linear_entropy_electron_exact(n0, b);
            pur_dev = std::max(pur_dev, std::abs(cf - oracle::quad_trace_purity(n0, b)));
        }
    out.push_back(make("consistency/purity-vs-quadrature", 1e-6, pur_dev));

    oracle::HamiltonianSpec spec{200, {0.8, 0.0}, 1.0, 1.0};
    out.push_back(make("consistency/eigen-residual", 1e-10, oracle::eigen_residual(spec, 5)));
    return out;
}

double fit_slope(const std::vector<double>& n0s, const std::vector<double>& devs) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = n0s.size();
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::log(n0s[i]), y = std::log(devs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<Check> criterion6() {
    std::vector<Check> out;
    const double drive = 2.0;
    entangled::DetectionPoint p{2.0, 0.0, 0.5};
    std::vector<double> ns{1e2, 1e3, 1e4}, amp_devs, dist_devs;
    for (double n0d : ns) {
        long n0 = long(n0d);
        double b = drive / (2.0 * std::sqrt(double(n0)));
        double d = 0.0;
        for (int k = 0; k <= 6; ++k) {
            Complex e = entangled::joint_amplitude_exact(k, n0, p, b).value;
            Complex a = entangled::joint_amplitude_asymptotic(k, p, drive).value;
            d = std::max(d, std::abs(e - a));
        }
        amp_devs.push_back(d);
        auto asym = density::photon_dist_asymptotic(drive * drive / 2.0);
        double dd = 0.0;
        for (int k = -10; k <= 10; ++k)
            dd = std::max(dd, std::abs(density::photon_weight_exact(k, n0, b) - asym.at(k)));
        dist_devs.push_back(dd);
    }
    double s_amp = fit_slope(ns, amp_devs);
    double s_dist = fit_slope(ns, dist_devs);
    auto in_window = [](double s) { return s >= -1.0 && s <= -0.5 ? 0.0 : 1.0; };
    {
        std::ostringstream n;
        n << "convergence/amplitude slope=" << s_amp;
        out.push_back(make(n.str(), 0.5, in_window(s_amp)));
    }
    {
        std::ostringstream n;
        n << "convergence/distribution slope=" << s_dist;
        out.push_back(make(n.str(), 0.5, in_window(s_dist)));
    }
    return out;
}

std::vector<Check> criterion7() {
    std::vector<Check> out;
    const double gamma = 1.0;
    const int branch = 0;
    auto [state, jp] = phase::jackiw_state(gamma, branch, 0);
    out.push_back(make("jackiw/u1", 1e-8,
                       std::abs(phase::uncertainty_u1(state) - 0.25)));
    // recursion residual with a_{-1} := 0
    double res = 0.0;
    const auto& a = state.coefficients;
    for (int n = 0; n + 1 < state.dim(); ++n) {
        Complex prev = n == 0 ? Complex(0.0) : Complex(a(n - 1));
        Complex lhs = (jp.nu - double(n)) * a(n);
        Complex rhs = Complex(0.0, gamma / 2.0) * (prev + a(n + 1));
        res = std::max(res, std::abs(lhs - rhs));
    }
    out.push_back(make("jackiw/recursion residual", 1e-10, res));
    auto ops = phase::build_operators(state.dim());
    out.push_back(make("jackiw/<C>", 1e-10, std::abs(phase::expectation(ops.C, state))));
    out.push_back(make("jackiw/<N>=nu", 1e-8,
                       std::abs(phase::expectation(ops.N, state).real() - jp.nu)));
    double branch_ok = (jp.nu > 2.0 * branch && jp.nu < 2.0 * branch + 1.0) ? 0.0 : 1.0;
    out.push_back(make("jackiw/nu in (2s,2s+1)", 0.5, branch_ok));
    std::mt19937 rng(20260826);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double worst = 1e300;
    for (int trial = 0; trial < 1000; ++trial) {
        phase::FockState pert = state;
        phase::Vector delta(state.dim());
        for (int n = 0; n < state.dim(); ++n) delta(n) = Complex(gauss(rng), gauss(rng));
        delta.tail(5).setZero(); // stay inside the well-truncated subspace
        delta *= 1e-2 / delta.norm();
        pert.coefficients += delta;
        pert.normalize();
        worst = std::min(worst, phase::uncertainty_u1(pert));
    }
    out.push_back(make("jackiw/perturbed u1 >= 1/4", 1e-9,
                       std::max(0.0, 0.25 - worst)));
    return out;
}

entangled::Shape profile_shape(double drive, double x, double theta) {
    entangled::DetectionPoint p{x, 0.0, theta};
    std::vector<double> prof;
    prof.reserve(81);
    for (int k = 0; k <= 80; ++k)
        prof.push_back(std::norm(entangled::joint_amplitude_asymptotic(k, p, drive).value));
    return entangled::classify_shape(prof);
}

std::vector<Check> criterion8() {
    std::vector<Check> out;
    const double drive = 4.0, x = 10.0;
    auto want = [&](double s, entangled::Shape expect) {
        bool ok = profile_shape(drive, x, s * x) == expect;
        std::ostringstream n;
        n << "figure2/s=" << s << " "
          << (expect == entangled::Shape::monotonic ? "monotonic" : "oscillatory");
        out.push_back(make(n.str(), 0.5, ok ? 0.0 : 1.0));
    };
    want(0.3, entangled::Shape::monotonic);
    want(0.6, entangled::Shape::oscillatory);
    want(1.0, entangled::Shape::oscillatory);
    want(1.5, entangled::Shape::oscillatory);

    double lower = 0.0, upper = 0.0;
    entangled::Shape prevs = profile_shape(drive, x, 0.05 * x);
    for (double s = 0.075; s <= 6.0; s += 0.025) {
        entangled::Shape cur = profile_shape(drive, x, s * x);
        if (cur != prevs) {
            if (lower == 0.0)
                lower = s - 0.0125;
            else if (upper == 0.0)
                upper = s - 0.0125;
        }
        prevs = cur;
    }
    out.push_back(make("figure3/lower boundary", 0.2, std::abs(lower - 0.4) / 0.4));
    out.push_back(make("figure3/upper boundary", 0.2, std::abs(upper - 2.8) / 2.8));

    // Fig. 1: k=0 radial-density maximum near x=2, channels 0/1 dominate
    auto radial = [&](int k, double xx) {
        entangled::DetectionPoint p{xx, 0.0, 0.0};
        return xx * std::norm(entangled::joint_amplitude_asymptotic(k, p, 2.0).value);
    };
    double best_x = 0.0, best_v = -1.0;
    for (double xx = 0.0; xx <= 6.0; xx += 1e-3)
        if (double v = radial(0, xx); v > best_v) {
            best_v = v;
            best_x = xx;
        }
    out.push_back(make("figure1/k=0 max location", 0.1, std::abs(best_x - 2.0) / 2.0));
    double p0 = radial(0, best_x), p1 = radial(1, best_x);
    double worst_high = 0.0;
    for (int k = 2; k <= 10; ++k) worst_high = std::max(worst_high, radial(k, best_x));
    bool dominant = p0 > worst_high && p1 > worst_high;
    out.push_back(make("figure1/channels 0,1 dominate", 0.5, dominant ? 0.0 : 1.0));
    return out;
}

std::vector<Check> criterion9() {
    std::vector<Check> out;
    const int dim = 48, d = dim - 1; // interior rows/columns
    auto ops = phase::build_operators(dim);
    using phase::Matrix;
    Matrix I = Matrix::Identity(dim, dim);
    auto interior_max = [&](const Matrix& m) {
        return m.topLeftCorner(d, d).cwiseAbs().maxCoeff();
    };
    const Matrix& E = ops.E.entries;
    Matrix Ed = E.adjoint();
    out.push_back(make("algebra/EE+ = 1", 1e-13, interior_max(E * Ed - I)));
    out.push_back(make("algebra/E+E = 1-P0", 1e-13,
                       interior_max(Ed * E - (I - ops.P0.entries))));
    const Matrix& C = ops.C.entries;
    const Matrix& S = ops.S.entries;
    const Matrix& N = ops.N.entries;
    out.push_back(make("algebra/C^2+S^2 = 1-P0/2", 1e-13,
                       interior_max(C * C + S * S - (I - 0.5 * ops.P0.entries))));
    Complex i(0.0, 1.0);
    out.push_back(make("algebra/[N,C] = -iS", 1e-13, interior_max(N * C - C * N + i * S)));
    out.push_back(make("algebra/[N,S] = iC", 1e-13, interior_max(N * S - S * N - i * C)));
    out.push_back(make("algebra/[S,C] = P0/2i", 1e-13,
                       interior_max(S * C - C * S - ops.P0.entries / (2.0 * i))));
    return out;
}

std::vector<Check> quick_identities() {
    std::vector<Check> out;
    using specfun::bessel_i_int;
    using specfun::bessel_j;
    // J_k(i z) = i^k I_k(z)
    double dev = 0.0;
    for (int k : {0, 1, 3, 8})
        for (double z : {0.5, 5.0, 20.0, 50.0}) {
            Complex lhs = bessel_i_int(k, Complex(0.0, z));
            double jk = bessel_j(k, z);
            Complex rhs = std::pow(Complex(0.0, 1.0), double(k)) * jk;
            // I_k(iz) = i^k J_k(z)
            dev = std::max(dev, std::abs(lhs - rhs) / (1.0 + std::abs(jk)));
        }
    out.push_back(make("identity/I_k(iz) = i^k J_k(z)", 1e-10, dev));
    dev = 0.0;
    for (double z : {1.0, 10.0, 60.0, 100.0}) {
        int band = int(z) + 40 + 10 * int(std::sqrt(z + 1.0));
        double sum = specfun::bessel_i_int(0, z).real();
        for (int n = 1; n <= band; ++n) {
            auto ls = specfun::bessel_i_int_log(n, Complex(z));
            sum += 2.0 * std::exp(ls.log_magnitude) * ls.phase.real();
        }
        dev = std::max(dev, std::abs(sum * std::exp(-z) - 1.0));
    }
    out.push_back(make("identity/sum I_n(z) = e^z", 1e-12, dev));
    dev = 0.0;
    for (double xi : {0.5, 4.0, 17.0, 30.0}) {
        double sum = bessel_j(0, xi) * bessel_j(0, xi);
        int band = int(xi) + 60;
        for (int k = 1; k <= band; ++k) {
            double t = bessel_j(k, xi) * bessel_j(k, xi);
            sum += 2.0 * (k % 2 ? -t : t);
        }
        dev = std::max(dev, std::abs(sum - bessel_j(0, 2.0 * xi)));
    }
    out.push_back(make("identity/sum (-1)^k J_k^2 = J_0(2xi)", 1e-10, dev));
    // Weber integrals
    {
        Complex a(2.0, 0.3);
        double c = 0.9;
        auto f = [&](double x) -> Complex {
            // J_0 of complex argument via I_0(i a x)... use series identity
            Complex z = Complex(0.0, 1.0) * a * x;
            return x * bessel_i_int(0, z) * std::exp(-c * c * x * x);
        };
        auto r = quad::integrate_semi_infinite(f, 1e-13, 10.0, 1e-19);
        Complex expect = std::exp(-a * a / (4.0 * c * c)) / (2.0 * c * c);
        out.push_back(make("identity/Weber first integral", 1e-10,
                           std::abs(r.value - expect)));
    }
    {
        double a = 1.7, b = 2.4, c = 1.1;
        for (int k : {0, 2}) {
            auto f = [&](double x) -> Complex {
                return x * bessel_j(k, a * x) * bessel_j(k, b * x) *
                       std::exp(-c * c * x * x);
            };
            auto r = quad::integrate_semi_infinite(f, 1e-13, 10.0, 1e-19);
            double expect = std::exp(-(a * a + b * b) / (4.0 * c * c)) / (2.0 * c * c) *
                            bessel_i_int(k, a * b / (2.0 * c * c)).real();
            std::ostringstream n;
            n << "identity/Weber second integral k=" << k;
            out.push_back(make(n.str(), 1e-10, std::abs(r.value.real() - expect)));
        }
    }
    // unitarity of the displacement elements
    dev = 0.0;
    for (auto [n0, s] : {std::pair<long, double>{5, 0.7}, {50, 2.0}})
        dev = std::max(dev, std::abs(oracle::sum_oracle_element_norm(
                                         n0, displacement::SigmaValue(Complex(s, 0.3))) -
                                     1.0));
    out.push_back(make("identity/displacement unitarity", 1e-10, dev));
    return out;
}

} // namespace

std::vector<Check> criterion(int n) {
    switch (n) {
        case 1: return criterion1();
        case 2: return criterion2();
        case 3: return criterion3();
        case 4: return criterion4();
        case 5: return criterion5();
        case 6: return criterion6();
        case 7: return criterion7();
        case 8: return criterion8();
        case 9: return criterion9();
        default: throw std::invalid_argument("criterion: index must be 1..9");
    }
}

std::vector<Check> run_quick() {
    std::vector<Check> out = quick_identities();
    for (auto&& c : criterion2()) out.push_back(c);
    for (auto&& c : criterion9()) out.push_back(c);
    // one oracle pair of each kind
    entangled::DetectionPoint p{2.0, 0.0, 0.5};
    out.push_back(make("oracle/amplitude point", 1e-8,
                       std::abs(entangled::joint_amplitude_exact(1, 20, p, 0.2236).value -
                                oracle::quad_joint_amplitude(1, 20, p, 0.2236))));
    out.push_back(make("oracle/distribution point", 1e-9,
                       std::abs(density::photon_weight_exact(2, 30, 0.4) -
                                oracle::sum_oracle_distribution(30, 0.4, 2, 2).at(2))));
    out.push_back(make("oracle/purity point", 1e-6,
                       std::abs((1.0 - density::linear_entropy_electron_exact(20, 0.6)) -
                                oracle::quad_trace_purity(20, 0.6))));
    oracle::HamiltonianSpec spec{200, {0.8, 0.0}, 1.0, 1.0};
    out.push_back(make("oracle/eigen residual", 1e-10, oracle::eigen_residual(spec, 5)));
    return out;
}

std::vector<Check> run_full() {
    std::vector<Check> out = quick_identities();
    for (int n = 1; n <= 9; ++n)
        for (auto&& c : criterion(n)) out.push_back(c);
    return out;
}

bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
}

std::string to_json(const std::vector<Check>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j{{"name", c.name},
                         {"tolerance", c.tolerance},
                         {"deviation", c.deviation},
                         {"pass", c.pass}};
        if (!c.note.empty()) j["note"] = c.note;
        arr.push_back(j);
    }
    nlohmann::json doc{{"checks", arr}, {"all_pass", all_pass(checks)}};
    return doc.dump(2);
}

} // namespace phel::verify
