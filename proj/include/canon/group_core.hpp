#pragma once

// Exact-law arithmetic for C(1,3) = U(1,3) x_s H(1,3).
//
// Elements are stored in the U(1,3) x_s H(1,3) form g(U, omega, iota); the
// SU(1,3) x_s Os(1,3) form g(U, theta, omega, iota) is a derived view.

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace canon {

using cd = std::complex<double>;
using C4 = Eigen::Vector4cd;
using R4 = Eigen::Vector4d;
using M4 = Eigen::Matrix4cd;
using Rng = std::mt19937_64;

inline constexpr double kElementTolerance = 1e-12;

/// diag(-1, +1, +1, +1).
struct Metric {
  static constexpr double diag(int a) noexcept { return a == 0 ? -1.0 : 1.0; }
  static const M4& matrix();
};

/// (w, z) = eta_ab conj(w^a) z^b
cd hermitian_pairing(const C4& w, const C4& z);
/// x . y = eta_ab x^a y^b (bilinear, no conjugation)
cd bilinear_dot(const C4& x, const C4& y);
double lorentz_dot(const R4& x, const R4& y);

/// max |U^dagger eta U - eta| / max(1, |U|_max^2) together with ||det U| - 1|.
double pseudo_unitarity_residual(const M4& u);

/// A 4x4 complex matrix with U^dagger eta U = eta, checked at construction.
class PseudoUnitaryMatrix {
 public:
  PseudoUnitaryMatrix() : m_(M4::Identity()) {}
  explicit PseudoUnitaryMatrix(const M4& m, double tol = kElementTolerance);

  /// Skips validation; for products of already-valid factors.
  static PseudoUnitaryMatrix trusted(const M4& m);
  static PseudoUnitaryMatrix identity() { return {}; }

  const M4& matrix() const noexcept { return m_; }
  /// eta U^dagger eta, the exact group inverse.
  PseudoUnitaryMatrix inverse() const;
  double residual() const { return pseudo_unitarity_residual(m_); }

  friend PseudoUnitaryMatrix operator*(const PseudoUnitaryMatrix& a,
                                       const PseudoUnitaryMatrix& b) {
    return trusted(a.m_ * b.m_);
  }
  friend C4 operator*(const PseudoUnitaryMatrix& a, const C4& v) { return a.m_ * v; }

 private:
  struct TrustedTag {};
  PseudoUnitaryMatrix(const M4& m, TrustedTag) : m_(m) {}
  M4 m_;
};

struct CanonicalElement {
  PseudoUnitaryMatrix u;
  C4 omega = C4::Zero();
  double iota = 0.0;

  static CanonicalElement identity() { return {}; }
  static CanonicalElement heisenberg(const C4& omega, double iota);
  static CanonicalElement homogeneous(const PseudoUnitaryMatrix& u);
};

/// g(U',w',i') g(U,w,i) = g(U'U, w' + U'w, i' + i + Im (w', U'w)).
CanonicalElement compose(const CanonicalElement& lhs, const CanonicalElement& rhs);
CanonicalElement inverse(const CanonicalElement& g);

/// Largest componentwise distance between two elements.
double distance(const CanonicalElement& a, const CanonicalElement& b);

/// SU(1,3) x_s Os(1,3) view; U = e^{i theta} su with det su = 1.
struct SuOsForm {
  M4 su = M4::Identity();
  double theta = 0.0;
  C4 omega = C4::Zero();
  double iota = 0.0;
};

/// theta = arg(det U)/4 on the branch (-pi/4, pi/4].
SuOsForm to_su_os_form(const CanonicalElement& g);
CanonicalElement from_su_os_form(const SuOsForm& f);
/// Product in the Os-form parameters; matches `compose` after recomposition.
SuOsForm compose_su_os(const SuOsForm& lhs, const SuOsForm& rhs);

/// g(U,0,0)^{-1} g(I, w, i) g(U,0,0) = g(I, U^{-1} w, i).
CanonicalElement conjugate_normal(const CanonicalElement& g_u,
                                  const CanonicalElement& n);

/// exp of a u(1,3) element (X^dagger eta + eta X = 0).
PseudoUnitaryMatrix exp_u13(const M4& x);
/// u(1,3) element i eta H for Hermitian H.
M4 u13_from_hermitian(const M4& h);

/// Random U(1,3) element exp(i eta H), H Hermitian with entries ~ N(0, scale).
PseudoUnitaryMatrix random_u13(Rng& rng, double scale = 0.5);
C4 random_c4(Rng& rng, double scale = 1.0);
CanonicalElement random_element(Rng& rng, double scale = 0.5);

}  // namespace canon
