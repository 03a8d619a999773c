#include "canon/mackey_reps.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "canon/error.hpp"

namespace canon {

namespace {

constexpr cd kI(0.0, 1.0);

Eigen::Matrix4d eta_real() {
  return Eigen::Vector4d(-1, 1, 1, 1).asDiagonal();
}

double lorentz_dot_r(const R4& a, const R4& b) { return lorentz_dot(a, b); }

// Hermitian boost with Q e_0 = n, where n^0 = gamma > 0 real and (n, n) = -1.
M4 boost_from_unit(const C4& n) {
  const cd gamma = n[0];
  const Eigen::Vector3cd v = n.tail<3>();
  const double v2 = v.squaredNorm();
  M4 q = M4::Identity();
  q(0, 0) = gamma;
  q.block<3, 1>(1, 0) = v;
  q.block<1, 3>(0, 1) = v.adjoint();
  if (v2 > 0.0) q.block<3, 3>(1, 1) += ((gamma.real() - 1.0) / v2) * (v * v.adjoint());
  return q;
}

}  // namespace

DualPoint DualPoint::poincare(const R4& k) {
  DualPoint p;
  p.group = DualGroup::Poincare;
  p.k = k;
  return p;
}

DualPoint DualPoint::heisenberg(const R4& nu, double kappa) {
  DualPoint p;
  p.group = DualGroup::Heisenberg;
  p.nu = nu;
  p.kappa = kappa;
  return p;
}

DualPoint DualPoint::canonical(const C4& w) {
  DualPoint p;
  p.group = DualGroup::Canonical;
  p.w = w;
  return p;
}

const char* to_string(OrbitLabel l) {
  switch (l) {
    case OrbitLabel::Plus: return "O+";
    case OrbitLabel::Minus: return "O-";
    case OrbitLabel::Null: return "O0";
    case OrbitLabel::Zero: return "O^0";
    case OrbitLabel::Kappa: return "O_kappa";
    case OrbitLabel::Translation: return "O_u";
  }
  return "?";
}

const char* to_string(LittleGroup g) {
  switch (g) {
    case LittleGroup::SO3: return "SO(3)";
    case LittleGroup::SO12: return "SO(1,2)";
    case LittleGroup::E2: return "E(2)";
    case LittleGroup::SO13: return "SO(1,3)";
    case LittleGroup::U3: return "U(3)";
    case LittleGroup::U12: return "U(1,2)";
    case LittleGroup::C2: return "C(2)";
    case LittleGroup::U13: return "U(1,3)";
    case LittleGroup::Trivial: return "trivial";
    case LittleGroup::Full: return "full";
  }
  return "?";
}

const char* to_string(DualGroup g) {
  switch (g) {
    case DualGroup::Poincare: return "poincare";
    case DualGroup::Heisenberg: return "heisenberg";
    case DualGroup::Canonical: return "canonical";
  }
  return "?";
}

OrbitClass classify(const DualPoint& p, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "classification tolerance must be positive");
  switch (p.group) {
    case DualGroup::Heisenberg: {
      if (!p.nu.allFinite() || !std::isfinite(p.kappa))
        throw Error(ErrorKind::InvalidArgument, "non-finite dual point");
      if (std::abs(p.kappa) > tol) return {OrbitLabel::Kappa, LittleGroup::Trivial, p.kappa};
      return {OrbitLabel::Translation, LittleGroup::Full, 0.0};
    }
    case DualGroup::Poincare:
    case DualGroup::Canonical: {
      const bool lorentz = p.group == DualGroup::Poincare;
      double q, norm2;
      if (lorentz) {
        if (!p.k.allFinite()) throw Error(ErrorKind::InvalidArgument, "non-finite dual point");
        q = lorentz_dot_r(p.k, p.k);
        norm2 = p.k.squaredNorm();
      } else {
        if (!p.w.allFinite()) throw Error(ErrorKind::InvalidArgument, "non-finite dual point");
        q = hermitian_pairing(p.w, p.w).real();
        norm2 = p.w.squaredNorm();
      }
      if (std::sqrt(norm2) <= tol)
        return {OrbitLabel::Zero, lorentz ? LittleGroup::SO13 : LittleGroup::U13, 0.0};
      if (std::abs(q) <= tol * std::max(1.0, norm2))
        return {OrbitLabel::Null, lorentz ? LittleGroup::E2 : LittleGroup::C2, q};
      if (q < 0) return {OrbitLabel::Plus, lorentz ? LittleGroup::SO3 : LittleGroup::U3, q};
      return {OrbitLabel::Minus, lorentz ? LittleGroup::SO12 : LittleGroup::U12, q};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown dual group");
}

Lorentz random_lorentz(Rng& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  Eigen::Matrix4d a = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      a(i, j) = n(rng);
      a(j, i) = -a(i, j);
    }
  // X = eta A satisfies X^T eta + eta X = 0.
  const Eigen::Matrix4d x = eta_real() * a;
  return x.exp();
}

double lorentz_residual(const Lorentz& l) {
  const Eigen::Matrix4d e = eta_real();
  const double scale = std::max(1.0, l.cwiseAbs().maxCoeff() * l.cwiseAbs().maxCoeff());
  return (l.transpose() * e * l - e).cwiseAbs().maxCoeff() / scale;
}

DualPoint act(const Lorentz& l, const DualPoint& p) {
  if (p.group != DualGroup::Poincare)
    throw Error(ErrorKind::InvalidArgument, "Lorentz action applies to Poincare dual points");
  return DualPoint::poincare(l * p.k);
}

DualPoint act(const PseudoUnitaryMatrix& u, const DualPoint& p) {
  if (p.group != DualGroup::Canonical)
    throw Error(ErrorKind::InvalidArgument, "U(1,3) action applies to canonical dual points");
  return DualPoint::canonical(u * p.w);
}

DualPoint act_heisenberg(const R4& alpha, const DualPoint& p) {
  if (p.group != DualGroup::Heisenberg)
    throw Error(ErrorKind::InvalidArgument, "coadjoint action applies to Heisenberg dual points");
  return DualPoint::heisenberg(p.nu - 2.0 * p.kappa * alpha, p.kappa);
}

double off_block_norm(const M4& m) {
  double r = 0.0;
  for (int i = 1; i < 4; ++i) r = std::max({r, std::abs(m(0, i)), std::abs(m(i, 0))});
  return r;
}

PolarSplit polar_split(const PseudoUnitaryMatrix& u) {
  const M4& um = u.matrix();
  const M4 h = um * um.adjoint();
  Eigen::SelfAdjointEigenSolver<M4> es(h);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw Error(ErrorKind::ConvergenceFailure, "polar split: U U^dagger is not positive definite");
  M4 q = es.eigenvectors() * es.eigenvalues().cwiseSqrt().cast<cd>().asDiagonal() *
         es.eigenvectors().adjoint();
  q = (q + q.adjoint()) / 2.0;
  const M4& eta = Metric::matrix();
  // Exact inverse of a pseudo-unitary Hermitian factor is eta Q eta.
  M4 r = eta * q * eta * um;
  // One refinement: project R onto the block structure and rebuild Q = U R^{-1}.
  M4 rb = r;
  for (int i = 1; i < 4; ++i) rb(0, i) = rb(i, 0) = 0.0;
  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(rb.block<3, 3>(1, 1), Eigen::ComputeFullU | Eigen::ComputeFullV);
  rb.block<3, 3>(1, 1) = svd.matrixU() * svd.matrixV().adjoint();
  rb(0, 0) /= std::abs(rb(0, 0));
  q = um * rb.adjoint();
  q = (q + q.adjoint()) / 2.0;
  return {PseudoUnitaryMatrix::trusted(q), PseudoUnitaryMatrix::trusted(rb)};
}

PseudoUnitaryMatrix boost_to(const DualPoint& p) {
  C4 w;
  if (p.group == DualGroup::Poincare) w = p.k.cast<cd>();
  else if (p.group == DualGroup::Canonical) w = p.w;
  else throw Error(ErrorKind::InvalidArgument, "boost_to needs a Poincare or canonical point");
  const double q = hermitian_pairing(w, w).real();
  if (!(q < 0.0) || std::abs(w[0]) == 0.0)
    throw Error(ErrorKind::NotTimelike, "boost_to: point is not strictly timelike");
  const double mu = std::sqrt(-q);
  const cd phase = w[0] / std::abs(w[0]);
  const C4 n = w / (mu * phase);
  return PseudoUnitaryMatrix::trusted(boost_from_unit(n));
}

M4 wigner_rotation(const M4& u, const DualPoint& p) {
  const PseudoUnitaryMatrix qp = boost_to(p);
  DualPoint up = p;
  if (p.group == DualGroup::Poincare) up.k = (u * p.k.cast<cd>()).real();
  else up.w = u * p.w;
  const PseudoUnitaryMatrix qup = boost_to(up);
  return qup.inverse().matrix() * u * qp.matrix();
}

PoincareElement compose(const PoincareElement& a, const PoincareElement& b) {
  return {a.l * b.l, a.x + a.l * b.x};
}

MassShellField induced_rep_poincare(double mu, const PoincareElement& g, MassShellField f,
                                    SpinRep sigma, double shell_tol) {
  if (!(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "mass must be positive");
  const Eigen::Matrix4d e = eta_real();
  const Lorentz linv = e * g.l.transpose() * e;
  return [=](const R4& k) -> Eigen::VectorXcd {
    const double shell = lorentz_dot_r(k, k) + mu * mu;
    if (std::abs(shell) > shell_tol * std::max(1.0, k.squaredNorm()))
      throw Error(ErrorKind::OffShell, "momentum is off the mass shell k.k = -mu^2");
    const R4 kp = linv * k;
    Eigen::VectorXcd v = std::exp(kI * lorentz_dot_r(k, g.x)) * f(kp);
    if (sigma) {
      const M4 r = wigner_rotation(g.l.cast<cd>(), DualPoint::poincare(kp));
      v = sigma(r.real()) * v;
    }
    return v;
  };
}

PositionRule induced_rep_heisenberg(double kappa0, const CanonicalElement& g, PositionRule f) {
  if (kappa0 == 0.0 || !std::isfinite(kappa0))
    throw Error(ErrorKind::InvalidArgument, "kappa0 must be nonzero (use the Heisenberg characters)");
  if ((g.u.matrix() - M4::Identity()).cwiseAbs().maxCoeff() > kElementTolerance)
    throw Error(ErrorKind::InvalidArgument, "Weyl-Heisenberg element must have U = I");
  const R4 alpha = g.omega.real();
  const R4 beta = g.omega.imag();
  const double iota = g.iota;
  return [=](const R4& x) {
    const double phase = kappa0 * (iota - 2.0 * lorentz_dot_r(x, beta) + lorentz_dot_r(alpha, beta));
    return std::exp(kI * phase) * f(x - alpha);
  };
}

cd character_w(const C4& w, const C4& omega) {
  return std::exp(kI * hermitian_pairing(w, omega).real());
}

cd character_heisenberg(const R4& u, const R4& v, const CanonicalElement& g) {
  const R4 alpha = g.omega.real();
  const R4 beta = g.omega.imag();
  return std::exp(kI * (lorentz_dot_r(u, beta) + lorentz_dot_r(v, alpha)));
}

CircleRule character_oscillator(const C4& w, double theta, const C4& omega, CircleRule f) {
  return [=](double phi) {
    return character_w(w, std::exp(-kI * phi) * omega) * f(phi - theta);
  };
}

CanonicalField induced_rep_canonical(double mu, const CanonicalElement& g, CanonicalField f,
                                     CompactRep sigma, double shell_tol) {
  if (!(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "mass must be positive");
  const M4 u = g.u.matrix();
  const M4 uinv = g.u.inverse().matrix();
  const C4 omega = g.omega;
  return [=](const C4& w) -> Eigen::VectorXcd {
    const double shell = hermitian_pairing(w, w).real() + mu * mu;
    if (std::abs(shell) > shell_tol * std::max(1.0, w.squaredNorm()))
      throw Error(ErrorKind::OffShell, "point is off the orbit (w, w) = -mu^2");
    const C4 wp = uinv * w;
    Eigen::VectorXcd v = character_w(w, omega) * f(wp);
    if (sigma) v = sigma(wigner_rotation(u, DualPoint::canonical(wp))) * v;
    return v;
  };
}

}  // namespace canon
