#pragma once

// Orbit classification, little groups, pseudo-unitary polar split, Wigner
// factors and pointwise induced-representation evaluators.

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "canon/group_core.hpp"

namespace canon {

enum class DualGroup { Poincare, Heisenberg, Canonical };

/// A point of a unitary dual: k in R^4 (Poincare), (nu, kappa) (Heisenberg),
/// or w in C^4 (canonical group at hbar = 0).
struct DualPoint {
  DualGroup group = DualGroup::Canonical;
  R4 k = R4::Zero();
  R4 nu = R4::Zero();
  double kappa = 0.0;
  C4 w = C4::Zero();

  static DualPoint poincare(const R4& k);
  static DualPoint heisenberg(const R4& nu, double kappa);
  static DualPoint canonical(const C4& w);
};

enum class OrbitLabel { Plus, Minus, Null, Zero, Kappa, Translation };
enum class LittleGroup { SO3, SO12, E2, SO13, U3, U12, C2, U13, Trivial, Full };

struct OrbitClass {
  OrbitLabel label;
  LittleGroup little_group;
  /// k.k, kappa, or (w, w).
  double invariant;
};

const char* to_string(OrbitLabel l);       // "O+", "O-", "O0", "O^0", "O_kappa", "O_u"
const char* to_string(LittleGroup g);      // "SO(3)", ..., "trivial", "full"
const char* to_string(DualGroup g);        // "poincare", "heisenberg", "canonical"

/// |q| <= tol * max(1, |p|^2) counts as zero; |p| <= tol is the degenerate orbit.
OrbitClass classify(const DualPoint& p, double tol = 1e-9);

/// Proper orthochronous Lorentz matrix L with L^T eta L = eta.
using Lorentz = Eigen::Matrix4d;
Lorentz random_lorentz(Rng& rng, double scale = 0.5);
double lorentz_residual(const Lorentz& l);

/// Homogeneous actions used for orbit invariance: k -> L k, w -> U w, and the
/// coadjoint shift nu -> nu - 2 kappa alpha of the Heisenberg translation alpha.
DualPoint act(const Lorentz& l, const DualPoint& p);
DualPoint act(const PseudoUnitaryMatrix& u, const DualPoint& p);
DualPoint act_heisenberg(const R4& alpha, const DualPoint& p);

/// U = Q R with Q Hermitian positive definite (a pure boost, eta Q eta = Q^{-1})
/// and R block diagonal in U(1) x U(3).
struct PolarSplit {
  PseudoUnitaryMatrix boost;
  PseudoUnitaryMatrix compact;
};
PolarSplit polar_split(const PseudoUnitaryMatrix& u);

/// Largest modulus among the (0, i) and (i, 0) entries, i = 1..3.
double off_block_norm(const M4& m);

/// Pure boost taking mu * phase * e_0 to the point, mu = sqrt(-(w, w)),
/// phase = w^0 / |w^0| (sign of k^0 for Poincare points).
PseudoUnitaryMatrix boost_to(const DualPoint& p);
/// R = boost_to(U p)^{-1} U boost_to(p).
M4 wigner_rotation(const M4& u, const DualPoint& p);

struct PoincareElement {
  Lorentz l = Lorentz::Identity();
  R4 x = R4::Zero();
};
/// g(L', x') g(L, x) = g(L'L, x' + L'x).
PoincareElement compose(const PoincareElement& a, const PoincareElement& b);

using MassShellField = std::function<Eigen::VectorXcd(const R4&)>;
/// Spin factor sigma(R) for R in SO(3) embedded as a 4x4 Lorentz matrix.
using SpinRep = std::function<Eigen::MatrixXcd(const Lorentz&)>;

/// (rho f)(k) = sigma(R) e^{i k.x} f(L^{-1} k), R = boost_to(k)^{-1} L boost_to(L^{-1} k).
/// Evaluation off the shell k.k = -mu^2 raises OffShell.
MassShellField induced_rep_poincare(double mu, const PoincareElement& g, MassShellField f,
                                    SpinRep sigma = nullptr, double shell_tol = 1e-9);

using PositionRule = std::function<cd(const R4&)>;
/// (rho f)(x) = e^{i kappa0 (iota - 2 x.beta + alpha.beta)} f(x - alpha), omega = alpha + i beta.
PositionRule induced_rep_heisenberg(double kappa0, const CanonicalElement& g, PositionRule f);

/// e^{i (u.beta + v.alpha)}, equivalently e^{i Re (w, omega)} with w = v + i u.
cd character_heisenberg(const R4& u, const R4& v, const CanonicalElement& g);
cd character_w(const C4& w, const C4& omega);

/// Circle-indexed oscillator evaluator at kappa = 0:
/// (rho_w(theta, omega, iota) f)(phi) = eta_w(e^{-i phi} omega) f(phi - theta).
using CircleRule = std::function<cd(double)>;
CircleRule character_oscillator(const C4& w, double theta, const C4& omega, CircleRule f);

/// hbar = 0 canonical evaluator on the orbit (w, w) = -mu^2:
/// (rho f)(w) = sigma(R) e^{i Re (w, omega)} f(U^{-1} w) with R the Wigner factor.
using CanonicalField = std::function<Eigen::VectorXcd(const C4&)>;
using CompactRep = std::function<Eigen::MatrixXcd(const M4&)>;
CanonicalField induced_rep_canonical(double mu, const CanonicalElement& g, CanonicalField f,
                                     CompactRep sigma = nullptr, double shell_tol = 1e-9);

}  // namespace canon
