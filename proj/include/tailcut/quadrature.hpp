#pragma once

// Adaptive Gauss-Legendre quadrature on a finite interval at arbitrary
// precision. Each panel is compared against the sum over its two halves;
// panels whose difference exceeds their share of the tolerance are split.

#include <functional>
#include <vector>

#include "tailcut/scalar.hpp"

namespace tailcut {

struct QuadratureConfig {
  int digits = 80;
  int nodes = 40;
  int max_subdivisions = 4000;
};

struct QuadratureResult {
  Scalar value;
  Scalar error_estimate;
  int panels = 0;
};

/// Nodes and weights of the N-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre_rule(int n, Kind kind, std::vector<Scalar>& nodes, std::vector<Scalar>& weights);

/// Integral of f over [a, b] to relative accuracy 10^(-digits) of the result.
/// Throws OracleFailure when max_subdivisions is exhausted.
QuadratureResult integrate(const std::function<Scalar(const Scalar&)>& f, const Scalar& a, const Scalar& b,
                           const QuadratureConfig& cfg);

}  // namespace tailcut
