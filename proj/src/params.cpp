#include "phel/params.hpp"

#include <cmath>
#include <stdexcept>

namespace phel::params {

void PhysicalConfig::validate() const {
    if (!(photon_energy_eV > 0)) throw std::invalid_argument("photon_energy_eV must be > 0");
    if (intensity_W_cm2 < 0) throw std::invalid_argument("intensity_W_cm2 must be >= 0");
    if (!(packet_width_cm > 0)) throw std::invalid_argument("packet_width_cm must be > 0");
    if (!(lambda_over_w > 0)) throw std::invalid_argument("lambda_over_w must be > 0");
    if (n0 < 0) throw std::invalid_argument("n0 must be >= 0");
    if (!(plasma_ratio >= 0 && plasma_ratio < 1))
        throw std::invalid_argument("plasma_ratio must lie in [0,1)");
    if (!(bandwidth_ratio > 0)) throw std::invalid_argument("bandwidth_ratio must be > 0");
}

DerivedParams derive(const PhysicalConfig& cfg) {
    cfg.validate();
    DerivedParams d{};
    d.mu = 1e-9 * std::sqrt(cfg.intensity_W_cm2) / cfg.photon_energy_eV;
    d.Lambda_over_w = cfg.lambda_over_w / (2.0 * M_PI);
    d.drive = d.mu * d.Lambda_over_w;
    d.q = 0.5 * d.drive * d.drive;
    d.b_valid = cfg.n0 > 0;
    d.b = d.b_valid ? d.drive / (2.0 * std::sqrt(double(cfg.n0))) : 0.0;
    d.mass_ratio = (1.0 + cfg.plasma_ratio) / (1.0 - cfg.plasma_ratio);
    double two_pi_w_over_lambda = 2.0 * M_PI / cfg.lambda_over_w;
    d.omega_tau0 = 0.5 * (kTwoMc2eV / cfg.photon_energy_eV) *
                   two_pi_w_over_lambda * two_pi_w_over_lambda;
    d.tau_ratio = d.mass_ratio;
    return d;
}

double mean_occupation(const PhysicalConfig& cfg) {
    cfg.validate();
    double e = cfg.photon_energy_eV;
    return 2.7e-5 * cfg.bandwidth_ratio * cfg.intensity_W_cm2 / (e * e * e * e);
}

double intensity_for_q(double q, double photon_energy_eV, double lambda_over_w) {
    double lw = lambda_over_w / (2.0 * M_PI);
    double drive = std::sqrt(2.0 * q);
    double mu = drive / lw;
    double r = mu * photon_energy_eV / 1e-9;
    return r * r;
}

} // namespace phel::params
