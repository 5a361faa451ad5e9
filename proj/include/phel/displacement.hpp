#pragma once

#include <cstdint>
#include <utility>

#include "phel/specfun.hpp"

namespace phel::displacement {

using specfun::Complex;

struct SigmaValue {
    Complex value;
    double magnitude;

    SigmaValue(Complex v = 0.0) : value(v), magnitude(std::abs(v)) {}
};

// <n+k|D[sigma]|n>, defined for k >= -n.
Complex element(int k, long n, const SigmaValue& sigma);

// Hilb limit: (sigma/|sigma|)^k J_k(2 sqrt(n0) |sigma|), error O(n0^{-3/4}).
Complex element_asymptotic(int k, long n0, const SigmaValue& sigma);

// (<k>, variance) of the displaced-number-state photon distribution.
std::pair<double, double> mean_variance(long n0, const SigmaValue& sigma);

// <n0|D+[sigma2] D[sigma1]|n0>
Complex overlap_product(long n0, const SigmaValue& sigma1, const SigmaValue& sigma2);

} // namespace phel::displacement
