#include "phel/phase.hpp"

#include <cmath>
#include <stdexcept>

namespace phel::phase {

using specfun::bessel_i_real_order;

void FockState::normalize() {
    double n = coefficients.norm();
    if (n == 0.0) throw std::invalid_argument("FockState: zero vector");
    coefficients /= n;
}

Operators build_operators(int dim) {
    if (dim < 2) throw std::invalid_argument("build_operators: dim must be >= 2");
    Operators ops;
    ops.N.entries = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) ops.N.entries(n, n) = double(n);
    ops.N.hermitian = true;
    ops.E.entries = Matrix::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) ops.E.entries(n, n + 1) = 1.0;
    Matrix ed = ops.E.entries.adjoint();
    ops.C.entries = 0.5 * (ops.E.entries + ed);
    ops.C.hermitian = true;
    ops.S.entries = (ops.E.entries - ed) / Complex(0.0, 2.0);
    ops.S.hermitian = true;
    ops.P0.entries = Matrix::Zero(dim, dim);
    ops.P0.entries(0, 0) = 1.0;
    ops.P0.hermitian = true;
    return ops;
}

namespace {

void check_tail(const FockState& state) {
    int d = state.dim();
    int top = std::min(5, d);
    double tail = state.coefficients.tail(top).squaredNorm();
    if (std::sqrt(tail) >= 1e-10)
        throw std::runtime_error("expectation: state not negligible at truncation");
}

} // namespace

Complex expectation(const FockOperator& op, const FockState& state) {
    check_tail(state);
    Complex v = state.coefficients.dot(op.entries * state.coefficients);
    if (op.hermitian) return {v.real(), 0.0};
    return v;
}

double variance(const FockOperator& op, const FockState& state) {
    check_tail(state);
    Vector w = op.entries * state.coefficients;
    double e2 = state.coefficients.dot(op.entries * w).real();
    Complex e = state.coefficients.dot(w);
    return e2 - std::norm(e);
}

namespace {

double uncertainty_impl(const FockState& state, bool first) {
    Operators ops = build_operators(state.dim());
    const FockOperator& num = first ? ops.C : ops.S;
    const FockOperator& den = first ? ops.S : ops.C;
    double d = expectation(den, state).real();
    if (std::abs(d) < 1e-14)
        throw std::domain_error("uncertainty product undefined: vanishing denominator");
    return variance(ops.N, state) * variance(num, state) / (d * d);
}

} // namespace

double uncertainty_u1(const FockState& state) { return uncertainty_impl(state, true); }
double uncertainty_u2(const FockState& state) { return uncertainty_impl(state, false); }

double find_nu(double gamma, int branch) {
    if (!(gamma > 0)) throw std::invalid_argument("find_nu: gamma must be > 0");
    if (branch < 0) throw std::invalid_argument("find_nu: branch must be >= 0");
    const double inset = 1e-8;
    double lo = 2.0 * branch + inset, hi = 2.0 * branch + 1.0 - inset;
    auto f = [&](double nu) { return bessel_i_real_order(-(nu + 1.0), gamma); };
    const int scan = 400;
    double scale = 0.0;
    double a = lo, fa = f(lo), root_a = 0.0, root_b = 0.0;
    bool found = false;
    for (int i = 1; i <= scan; ++i) {
        double b = lo + (hi - lo) * i / scan;
        double fb = f(b);
        scale = std::max(scale, std::abs(fb));
        if (!found && fa * fb < 0.0) {
            root_a = a;
            root_b = b;
            found = true;
        }
        a = b;
        fa = fb;
    }
    if (!found)
        throw std::runtime_error("find_nu: no root of I_{-(nu+1)}(gamma) in branch interval");
    double fa2 = f(root_a);
    for (int it = 0; it < 200; ++it) {
        double m = 0.5 * (root_a + root_b);
        double fm = f(m);
        if (fa2 * fm <= 0.0)
            root_b = m;
        else {
            root_a = m;
            fa2 = fm;
        }
        if (root_b - root_a < 1e-15 * (1.0 + root_b)) break;
    }
    double nu = 0.5 * (root_a + root_b);
    if (std::abs(f(nu)) > 1e-12 * std::max(scale, 1.0))
        throw std::runtime_error("find_nu: bisection did not reach root tolerance");
    return nu;
}

int default_jackiw_dim(double gamma, double nu) {
    return int(std::ceil(nu)) + int(std::ceil(gamma)) + 60;
}

std::pair<FockState, JackiwParams> jackiw_state(double gamma, int branch, int dim) {
    double nu = find_nu(gamma, branch);
    if (dim < 2) dim = default_jackiw_dim(gamma, nu);
    FockState st;
    st.coefficients = Vector::Zero(dim);
    Complex mi(0.0, -1.0);
    Complex ph = 1.0;
    double sum = 0.0;
    for (int n = 0; n < dim; ++n) {
        double in = bessel_i_real_order(double(n) - nu, gamma);
        st.coefficients(n) = ph * in;
        sum += in * in;
        ph *= mi;
    }
    double top = std::norm(st.coefficients(dim - 1));
    if (top >= 1e-20 * sum)
        throw std::runtime_error("jackiw_state: truncation dimension too small");
    st.normalize();
    return {st, JackiwParams{gamma, nu, branch}};
}

FockState xi_photon_part(const entangled::DetectionPoint& point, double drive,
                         long n0, int dim) {
    if (n0 >= dim) throw std::invalid_argument("xi_photon_part: n0 must be < dim");
    Complex g = entangled::gamma_of(point, drive);
    FockState st;
    st.coefficients = Vector::Zero(dim);
    if (point.x == 0.0) {
        st.coefficients(n0) = 1.0;
        return st;
    }
    Complex mi(0.0, -1.0);
    Complex ph = 1.0;
    double sum = 0.0;
    for (int n = 0; n < dim; ++n) {
        Complex in = specfun::bessel_i_int(int(n - n0), g);
        Complex c = ph * std::exp(Complex(0.0, -double(n) * point.phi)) * in;
        ph *= mi;
        st.coefficients(n) = c;
        sum += std::norm(c);
    }
    double top = std::norm(st.coefficients(dim - 1));
    if (top >= 1e-20 * sum)
        throw std::runtime_error("xi_photon_part: truncation dimension too small");
    st.normalize();
    return st;
}

} // namespace phel::phase
