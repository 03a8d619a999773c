#include "canon/group_core.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "canon/error.hpp"

namespace canon {

const M4& Metric::matrix() {
  static const M4 eta = [] {
    M4 m = M4::Zero();
    for (int a = 0; a < 4; ++a) m(a, a) = diag(a);
    return m;
  }();
  return eta;
}

cd hermitian_pairing(const C4& w, const C4& z) {
  cd s = 0.0;
  for (int a = 0; a < 4; ++a) s += Metric::diag(a) * std::conj(w[a]) * z[a];
  return s;
}

cd bilinear_dot(const C4& x, const C4& y) {
  cd s = 0.0;
  for (int a = 0; a < 4; ++a) s += Metric::diag(a) * x[a] * y[a];
  return s;
}

double lorentz_dot(const R4& x, const R4& y) {
  double s = 0.0;
  for (int a = 0; a < 4; ++a) s += Metric::diag(a) * x[a] * y[a];
  return s;
}

double pseudo_unitarity_residual(const M4& u) {
  const M4& eta = Metric::matrix();
  // Boosts have large entries; rounding in U^dagger eta U scales with |U|^2.
  const double scale = std::max(1.0, u.cwiseAbs().maxCoeff() * u.cwiseAbs().maxCoeff());
  const double metric_res = (u.adjoint() * eta * u - eta).cwiseAbs().maxCoeff() / scale;
  const double det_res = std::abs(std::abs(u.determinant()) - 1.0) / scale;
  return std::max(metric_res, det_res);
}

PseudoUnitaryMatrix::PseudoUnitaryMatrix(const M4& m, double tol) : m_(m) {
  if (!m.allFinite()) throw Error(ErrorKind::InvalidElement, "U has non-finite entries");
  const double res = pseudo_unitarity_residual(m);
  if (!(res <= tol)) {
    std::ostringstream os;
    os << "U violates U^dagger eta U = eta (residual " << res << " > " << tol << ")";
    throw Error(ErrorKind::InvalidElement, os.str());
  }
}

PseudoUnitaryMatrix PseudoUnitaryMatrix::trusted(const M4& m) {
  return PseudoUnitaryMatrix(m, TrustedTag{});
}

PseudoUnitaryMatrix PseudoUnitaryMatrix::inverse() const {
  const M4& eta = Metric::matrix();
  return trusted(eta * m_.adjoint() * eta);
}

CanonicalElement CanonicalElement::heisenberg(const C4& omega, double iota) {
  return {PseudoUnitaryMatrix::identity(), omega, iota};
}

CanonicalElement CanonicalElement::homogeneous(const PseudoUnitaryMatrix& u) {
  return {u, C4::Zero(), 0.0};
}

CanonicalElement compose(const CanonicalElement& lhs, const CanonicalElement& rhs) {
  const C4 rotated = lhs.u * rhs.omega;
  // -(i/2)((w', U'w) - conj(w', U'w)) = Im (w', U'w)
  const double cocycle = hermitian_pairing(lhs.omega, rotated).imag();
  return {lhs.u * rhs.u, lhs.omega + rotated, lhs.iota + rhs.iota + cocycle};
}

CanonicalElement inverse(const CanonicalElement& g) {
  const PseudoUnitaryMatrix uinv = g.u.inverse();
  return {uinv, -(uinv * g.omega), -g.iota};
}

double distance(const CanonicalElement& a, const CanonicalElement& b) {
  const double du = (a.u.matrix() - b.u.matrix()).cwiseAbs().maxCoeff();
  const double dw = (a.omega - b.omega).cwiseAbs().maxCoeff();
  return std::max({du, dw, std::abs(a.iota - b.iota)});
}

SuOsForm to_su_os_form(const CanonicalElement& g) {
  const double arg_det = std::arg(g.u.matrix().determinant());  // (-pi, pi]
  double theta = arg_det / 4.0;                                 // (-pi/4, pi/4]
  if (theta <= -std::numbers::pi / 4.0) theta += std::numbers::pi / 2.0;
  SuOsForm f;
  f.theta = theta;
  f.su = std::exp(cd(0.0, -theta)) * g.u.matrix();
  f.omega = g.omega;
  f.iota = g.iota;
  return f;
}

CanonicalElement from_su_os_form(const SuOsForm& f) {
  return {PseudoUnitaryMatrix::trusted(std::exp(cd(0.0, f.theta)) * f.su), f.omega, f.iota};
}

SuOsForm compose_su_os(const SuOsForm& lhs, const SuOsForm& rhs) {
  const C4 rotated = std::exp(cd(0.0, lhs.theta)) * (lhs.su * rhs.omega);
  SuOsForm out;
  out.su = lhs.su * rhs.su;
  out.theta = lhs.theta + rhs.theta;
  out.omega = lhs.omega + rotated;
  out.iota = lhs.iota + rhs.iota + hermitian_pairing(lhs.omega, rotated).imag();
  return out;
}

CanonicalElement conjugate_normal(const CanonicalElement& g_u, const CanonicalElement& n) {
  if (g_u.omega.cwiseAbs().maxCoeff() > kElementTolerance ||
      std::abs(g_u.iota) > kElementTolerance)
    throw Error(ErrorKind::InvalidArgument,
                "conjugate_normal: first argument must be homogeneous (omega = 0, iota = 0)");
  if ((n.u.matrix() - M4::Identity()).cwiseAbs().maxCoeff() > kElementTolerance)
    throw Error(ErrorKind::InvalidArgument,
                "conjugate_normal: second argument must lie in H(1,3) (U = I)");
  return CanonicalElement::heisenberg(g_u.u.inverse() * n.omega, n.iota);
}

M4 u13_from_hermitian(const M4& h) {
  return cd(0.0, 1.0) * Metric::matrix() * h;
}

PseudoUnitaryMatrix exp_u13(const M4& x) {
  const M4& eta = Metric::matrix();
  if ((x.adjoint() * eta + eta * x).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, x.cwiseAbs().maxCoeff()))
    throw Error(ErrorKind::InvalidArgument, "exp_u13: argument is not in u(1,3)");
  M4 u = x.exp();
  return PseudoUnitaryMatrix(u, 1e-11);
}

C4 random_c4(Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  C4 v;
  for (int a = 0; a < 4; ++a) v[a] = cd(n(rng), n(rng));
  return v;
}

PseudoUnitaryMatrix random_u13(Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  M4 h;
  for (int i = 0; i < 4; ++i) {
    h(i, i) = n(rng);
    for (int j = i + 1; j < 4; ++j) {
      h(i, j) = cd(n(rng), n(rng));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return exp_u13(u13_from_hermitian(h));
}

CanonicalElement random_element(Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {random_u13(rng, scale), random_c4(rng, 1.0), n(rng)};
}

}  // namespace canon
