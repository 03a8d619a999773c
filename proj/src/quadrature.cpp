#include "canon/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "canon/error.hpp"

namespace canon {

namespace {

// Orthonormal Hermite recurrence evaluated at x; returns (p_n, p_{n-1}).
std::pair<double, double> hermite_pair(int n, double x) {
  double p1 = std::pow(std::numbers::pi, -0.25);
  double p2 = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = x * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
  }
  return {p1, p2};
}

GaussHermite compute(int n) {
  GaussHermite gh;
  gh.nodes.assign(n, 0.0);
  gh.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    // Asymptotic starting guesses for the largest roots, then deflation steps.
    if (i == 0) z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -1.0 / 6.0);
    else if (i == 1) z -= 1.14 * std::pow(n, 0.426) / z;
    else if (i == 2) z = 1.86 * z - 0.86 * gh.nodes[n - 1];
    else if (i == 3) z = 1.91 * z - 0.91 * gh.nodes[n - 2];
    else z = 2.0 * z - gh.nodes[n - i + 1];
    double pp = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [p, pm] = hermite_pair(n, z);
      pp = std::sqrt(2.0 * n) * pm;
      const double dz = p / pp;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * std::max(1.0, std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw Error(ErrorKind::ConvergenceFailure, "Gauss-Hermite root did not converge");
    const auto [p, pm] = hermite_pair(n, z);
    pp = std::sqrt(2.0 * n) * pm;
    (void)p;
    gh.nodes[n - 1 - i] = z;
    gh.nodes[i] = -z;
    gh.weights[i] = gh.weights[n - 1 - i] = 2.0 / (pp * pp);
  }
  for (int i = 1; i < n; ++i)
    if (!(gh.nodes[i] > gh.nodes[i - 1]))
      throw Error(ErrorKind::ConvergenceFailure, "Gauss-Hermite roots not separated");
  return gh;
}

}  // namespace

const GaussHermite& gauss_hermite(int n) {
  if (n < 1 || n > 160) throw Error(ErrorKind::QuadratureOrder, "Gauss-Hermite order must be in [1, 160]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussHermite>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussHermite>(compute(n));
  return *slot;
}

}  // namespace canon
