#pragma once

#include <vector>

namespace canon {

/// Gauss-Hermite rule for weight e^{-x^2}: exact for polynomials of degree <= 2n-1.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached; nodes ascending. n in [1, 160].
const GaussHermite& gauss_hermite(int n);

}  // namespace canon
