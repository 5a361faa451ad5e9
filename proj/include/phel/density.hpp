#pragma once

#include <array>
#include <optional>
#include <vector>

#include "phel/specfun.hpp"

namespace phel::density {

using specfun::Complex;

enum class DistKind { exact, asymptotic };

struct PhotonDistribution {
    int k_min = 0;
    std::vector<double> weights; // index i -> k = k_min + i
    DistKind kind = DistKind::asymptotic;
    double norm_defect = 0.0;

    double at(int k) const;
};

struct EntropyReport {
    double von_neumann;
    double linear;
    double renyi2;
    double schmidt_number;
    std::optional<double> electron_linear_exact;
};

using Vec2 = std::array<double, 2>;

PhotonDistribution photon_dist_exact(long n0, double b);
PhotonDistribution photon_dist_asymptotic(double q);
PhotonDistribution photon_dist_asymptotic(double q, int k_max);

double photon_weight_exact(int k, long n0, double b);

double von_neumann_photon(double q);
double linear_entropy_photon(double q);
double linear_entropy_electron_exact(long n0, double b);

Complex electron_momentum_density(const Vec2& k1, const Vec2& k2, long n0,
                                  double b, double theta);

// Large-n0 position density F_e(x1, x2; theta); diagonal x1 == x2 gives the
// true position distribution P(x, theta).
Complex electron_position_density(double x1, double x2, double theta, double drive);
double position_distribution(double x, double theta, double drive);

EntropyReport entropy_report(double q, std::optional<long> n0 = std::nullopt,
                             std::optional<double> b = std::nullopt);

} // namespace phel::density
