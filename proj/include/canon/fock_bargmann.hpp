#pragma once

// Bargmann space of entire functions on C^4 with the positive per-mode
// Gaussian measure e^{-sum |z^a|^2} / pi^4, the Segal-Bargmann transform, and
// pointwise actions of the Weyl-Heisenberg, oscillator and canonical groups.
//
// Functions are kept as finite sums of products of one-variable factors
// whenever possible so that integrals factor into per-mode 2D quadratures.

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "canon/fock_operator.hpp"
#include "canon/group_core.hpp"

namespace canon {

/// One-variable factor. `degree` is the polynomial degree, or -1 when the
/// factor is not a polynomial (e.g. carries an exponential prefactor).
struct ModeFunction {
  std::function<cd(cd)> fn;
  int degree = -1;
};
using ModeFactor = std::shared_ptr<const ModeFunction>;

/// z^k / sqrt(k!); shared instances so transforms can reuse work.
ModeFactor normalized_power(int k);

struct ProductTerm {
  cd coeff = 1.0;
  std::array<ModeFactor, 4> factors;
};

class BargmannFunction {
 public:
  BargmannFunction() = default;
  static BargmannFunction basis(const MultiIndex& m);  // xi_m
  static BargmannFunction combination(const std::vector<std::pair<MultiIndex, cd>>& coeffs);
  static BargmannFunction from_terms(std::vector<ProductTerm> terms);
  /// Arbitrary rule; evaluation only (no inner products or transforms).
  static BargmannFunction generic(std::function<cd(const C4&)> rule);

  cd operator()(const C4& z) const;
  bool product_form() const noexcept { return !generic_; }
  const std::vector<ProductTerm>& terms() const noexcept { return terms_; }
  /// Largest per-mode polynomial degree, or -1 if any factor is not polynomial.
  int max_degree() const;

  BargmannFunction& operator+=(const BargmannFunction& o);
  BargmannFunction& operator*=(cd s);
  friend BargmannFunction operator+(BargmannFunction a, const BargmannFunction& b) { return a += b; }
  friend BargmannFunction operator*(cd s, BargmannFunction a) { return a *= s; }

 private:
  std::vector<ProductTerm> terms_;
  std::function<cd(const C4&)> generic_;
};

/// Real-variable counterpart of ModeFunction/ProductTerm.
struct PositionMode {
  std::function<cd(double)> fn;
};
using PositionFactor = std::shared_ptr<const PositionMode>;

struct PositionTerm {
  cd coeff = 1.0;
  std::array<PositionFactor, 4> factors;
};

class PositionFunction {
 public:
  PositionFunction() = default;
  explicit PositionFunction(std::vector<PositionTerm> terms) : terms_(std::move(terms)) {}
  /// Hermite function product eta_m(x) = prod_a (2^k k! sqrt(pi))^{-1/2} H_k(x) e^{-x^2/2}.
  static PositionFunction hermite(const MultiIndex& m);

  cd operator()(const R4& x) const;
  const std::vector<PositionTerm>& terms() const noexcept { return terms_; }

 private:
  std::vector<PositionTerm> terms_;
};

/// Normalized Hermite function of order k at x (three-term recurrence).
double hermite_function(int k, double x);

struct QuadratureGrid {
  /// Gauss-Hermite points per axis; 0 selects 2 * (max degree) + 8, or 48
  /// for non-polynomial integrands.
  int order = 0;
};

/// int conj(f) h dmu, positive measure.
cd bargmann_inner(const BargmannFunction& f, const BargmannFunction& h, QuadratureGrid grid = {});
/// eta-twisted pairing int conj(f(eta z)) h(z) dmu, eta z = (-z^0, z^1, z^2, z^3).
cd bargmann_eta_inner(const BargmannFunction& f, const BargmannFunction& h, QuadratureGrid grid = {});

/// Which variable each mode is diagonal in: mode 0 is T or E, modes 1..3 are Q or P.
enum class DiagonalSet { QT, PT, PE, QE };
DiagonalSet parse_diagonal_set(const std::string& s);
const char* to_string(DiagonalSet d);

struct TransformGrid {
  int bargmann_order = 100;  // 2D rule for z-integrals
  int position_order = 64;   // 1D rule for x-integrals
};

/// psi(x) = int conj(A(z, x)) f(z) dmu(z); per mode A(z,x) = pi^{-1/4} e^{-z^2/2 - x^2/2 + sqrt2 z x}
/// for position-diagonal modes and A(-i z, x) for momentum-diagonal ones.
PositionFunction to_position(const BargmannFunction& f, DiagonalSet set = DiagonalSet::QT,
                             TransformGrid grid = {});
/// f(z) = int A(z, x) psi(x) dx.
BargmannFunction to_bargmann(const PositionFunction& psi, DiagonalSet set = DiagonalSet::QT,
                             TransformGrid grid = {});

/// int conj(psi) phi dx over R^4 (per-mode Gauss-Hermite with `order` points).
cd position_inner(const PositionFunction& psi, const PositionFunction& phi, int order = 7);

using BargmannOperator = std::function<BargmannFunction(const BargmannFunction&)>;

/// (rho f)(z) = e^{kappa0 (i iota + (omega, z - omega/2))} f(z - omega).
BargmannOperator rep_weyl_heisenberg(double kappa0, const CanonicalElement& g);
/// e^{kappa0 (i iota + (omega, z - omega/2)) - i kappa1 theta} f(e^{-i theta}(z - omega)).
BargmannOperator rep_oscillator(double kappa0, int kappa1, double theta, const C4& omega, double iota);
/// e^{kappa0 (i iota + (omega, z - omega/2))} f(U^{-1}(z - omega)); the U-part only is
/// non-product, so the image is generic unless U is diagonal.
BargmannOperator rep_canonical(double kappa0, const CanonicalElement& g);

/// Oscillator element g(theta, omega, iota) as a canonical element with U = e^{i theta} I.
CanonicalElement oscillator_element(double theta, const C4& omega, double iota);

/// Position-space Weyl-Heisenberg action e^{i kappa0 (iota - 2 x.beta + alpha.beta)} psi(x - alpha)
/// on a product-form function (Lorentz dots); the image stays product-form.
PositionFunction rep_position_heisenberg(double kappa0, const CanonicalElement& g,
                                         const PositionFunction& psi);
/// (alpha, beta, iota) -> (sqrt2 alpha, beta / sqrt2, iota): the parameters under which the
/// transform intertwines the position and Bargmann actions on modes with kappa0 eta_aa > 0.
CanonicalElement position_parameters(const CanonicalElement& g);

/// <xi_m, rho xi_n> for |m|, |n| <= degree_cap.
Eigen::MatrixXcd rep_matrix(const BargmannOperator& rho, int degree_cap, QuadratureGrid grid = {});

}  // namespace canon
