#pragma once

#include <cstdint>
#include <string>

namespace phel::params {

inline constexpr double kTwoMc2eV = 1.021998e6;
inline constexpr double kInverseFineStructure = 137.035999;

struct PhysicalConfig {
    double photon_energy_eV = 1.0;
    double intensity_W_cm2 = 0.0;
    double packet_width_cm = 1e-8;
    double lambda_over_w = 4.0 * 3.14159265358979323846 * 1e3;
    std::int64_t n0 = 0;
    double plasma_ratio = 0.0;   // omega_p^2 / 2 omega^2
    double bandwidth_ratio = 1.0; // omega / Delta omega

    void validate() const;
};

struct DerivedParams {
    double mu;
    double Lambda_over_w;
    double drive;       // mu * Lambda / w
    double q;           // drive^2 / 2
    double b;           // drive / (2 sqrt(n0)); 0 flagged via b_valid
    bool b_valid;
    double mass_ratio;  // m_perp / m
    double omega_tau0;
    double tau_ratio;   // tau / tau0 = mass_ratio
};

DerivedParams derive(const PhysicalConfig& cfg);

double mean_occupation(const PhysicalConfig& cfg);

// Intensity that yields a given q at this photon energy / geometry.
double intensity_for_q(double q, double photon_energy_eV, double lambda_over_w);

struct LaserRow {
    const char* name;
    double photon_energy_eV;
    double bandwidth_ratio;
    double tabulated_coefficient; // nbar per unit intensity
};

// He-Ne inverse bandwidth 1e9: the printed 1e8 is inconsistent with the
// tabulated coefficient 2e3 by an order of magnitude; 1e9 reproduces it.
inline constexpr LaserRow kTableB1[3] = {
    {"Ti:Sa", 1.57, 2.0, 9e-6},
    {"Nd:Glass", 1.17, 3e3, 6e-2},
    {"He-Ne", 1.96, 1e9, 2e3},
};

} // namespace phel::params
