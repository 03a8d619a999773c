#include "canon/kinematics.hpp"

#include <cmath>

#include "canon/error.hpp"

namespace canon {

void PhysicalConstants::validate() const {
  if (!(std::isfinite(c) && std::isfinite(b) && std::isfinite(hbar) && c > 0 && b > 0 && hbar > 0))
    throw Error(ErrorKind::InvalidArgument, "constants c, b, hbar must be finite and positive");
}

double PhysicalConstants::lambda_t() const { return std::sqrt(hbar / (b * c)); }
double PhysicalConstants::lambda_q() const { return std::sqrt(hbar * c / b); }
double PhysicalConstants::lambda_p() const { return std::sqrt(hbar * b / c); }
double PhysicalConstants::lambda_e() const { return std::sqrt(hbar * b * c); }

namespace {

constexpr int T = 0, E = 1, Q = 2, P = 5;

}  // namespace

PhaseMatrix generator(const BoostParams& x, const PhysicalConstants& k) {
  k.validate();
  if ((x.theta - x.theta.transpose()).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, x.theta.cwiseAbs().maxCoeff()))
    throw Error(ErrorKind::InvalidArgument, "theta must be symmetric");
  const double c2 = k.c * k.c;
  const double b2 = k.b * k.b;
  PhaseMatrix g = PhaseMatrix::Zero();
  g(T, E) = x.vartheta / (c2 * b2);
  g(E, T) = -x.vartheta;
  for (int i = 0; i < 3; ++i) {
    g(T, Q + i) = x.beta[i] / c2;
    g(T, P + i) = x.gamma[i] / b2;
    g(E, Q + i) = -x.gamma[i];
    g(E, P + i) = x.beta[i];
    g(Q + i, T) = x.beta[i];
    g(Q + i, E) = -x.gamma[i] / b2;
    g(P + i, T) = x.gamma[i];
    g(P + i, E) = x.beta[i] / c2;
    for (int j = 0; j < 3; ++j) {
      g(Q + i, P + j) = -x.theta(i, j) / b2;
      g(P + i, Q + j) = x.theta(i, j) / c2;
    }
  }
  // (alpha x v)_i = eps_ijk alpha_j v_k
  Eigen::Matrix3d rot;
  rot << 0, -x.alpha[2], x.alpha[1],
         x.alpha[2], 0, -x.alpha[0],
         -x.alpha[1], x.alpha[0], 0;
  g.block<3, 3>(Q, Q) += rot;
  g.block<3, 3>(P, P) += rot;
  return g;
}

PhaseState infinitesimal_transform(const PhaseState& s, const BoostParams& params,
                                   const PhysicalConstants& k) {
  return s + generator(params, k) * s;
}

double rapidity(const Vec3& beta, const Vec3& gamma, const PhysicalConstants& k) {
  k.validate();
  return std::sqrt(beta.squaredNorm() / (k.c * k.c) + gamma.squaredNorm() / (k.b * k.b));
}

namespace {

// sinh(z)/z and (cosh(z) - 1)/z^2 with a series near zero.
void boost_coefficients(double z, double* s, double* c) {
  if (z < 1e-4) {
    const double z2 = z * z;
    *s = 1.0 + z2 / 6.0 + z2 * z2 / 120.0 + z2 * z2 * z2 / 5040.0;
    *c = 0.5 + z2 / 24.0 + z2 * z2 / 720.0 + z2 * z2 * z2 / 40320.0;
  } else {
    *s = std::sinh(z) / z;
    *c = (std::cosh(z) - 1.0) / (z * z);
  }
}

}  // namespace

PhaseMatrix pure_boost_matrix(const Vec3& beta, const Vec3& gamma, const PhysicalConstants& k) {
  BoostParams p;
  p.beta = beta;
  p.gamma = gamma;
  const PhaseMatrix g = generator(p, k);
  double s, c;
  boost_coefficients(rapidity(beta, gamma, k), &s, &c);
  return PhaseMatrix::Identity() + s * g + c * g * g;
}

PhaseState pure_boost(const PhaseState& s, const Vec3& beta, const Vec3& gamma,
                      const PhysicalConstants& k) {
  return pure_boost_matrix(beta, gamma, k) * s;
}

PhaseMatrix pure_boost_matrix_componentwise(const Vec3& beta, const Vec3& gamma,
                                            const PhysicalConstants& k) {
  const double z = rapidity(beta, gamma, k);
  double s, c;
  boost_coefficients(z, &s, &c);
  const double ch = 1.0 + c * z * z;
  const double c2 = k.c * k.c;
  const double b2 = k.b * k.b;
  PhaseMatrix m = PhaseMatrix::Zero();
  m(T, T) = ch;
  m(E, E) = ch;
  const Eigen::Matrix3d mix = beta * beta.transpose() / c2 + gamma * gamma.transpose() / b2;
  m.block<3, 3>(Q, Q) = Eigen::Matrix3d::Identity() + c * mix;
  m.block<3, 3>(P, P) = Eigen::Matrix3d::Identity() + c * mix;
  for (int i = 0; i < 3; ++i) {
    m(T, Q + i) = s * beta[i] / c2;
    m(T, P + i) = s * gamma[i] / b2;
    m(E, Q + i) = -s * gamma[i];
    m(E, P + i) = s * beta[i];
    m(Q + i, T) = s * beta[i];
    m(Q + i, E) = -s * gamma[i] / b2;
    m(P + i, E) = s * beta[i] / c2;
    m(P + i, T) = s * gamma[i];
  }
  return m;
}

PhaseMatrix quadratic_metric(const PhysicalConstants& k) {
  k.validate();
  PhaseMatrix g = PhaseMatrix::Zero();
  g(T, T) = 1.0;
  g(E, E) = 1.0 / (k.c * k.c * k.b * k.b);
  for (int i = 0; i < 3; ++i) {
    g(Q + i, Q + i) = -1.0 / (k.c * k.c);
    g(P + i, P + i) = -1.0 / (k.b * k.b);
  }
  return g;
}

double quadratic_form(const PhaseState& s, const PhysicalConstants& k) {
  return s.dot(quadratic_metric(k) * s);
}

PhaseMatrix symplectic_form() {
  PhaseMatrix j = PhaseMatrix::Zero();
  // omega(u, v) = u^T J v with omega = -de^dt + dp^dq.
  j(E, T) = -1.0;
  j(T, E) = 1.0;
  for (int i = 0; i < 3; ++i) {
    j(P + i, Q + i) = 1.0;
    j(Q + i, P + i) = -1.0;
  }
  return j;
}

double symplectic_residual(const PhaseMatrix& m) {
  const PhaseMatrix j = symplectic_form();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff() * m.cwiseAbs().maxCoeff());
  return (m.transpose() * j * m - j).cwiseAbs().maxCoeff() / scale;
}

double quadratic_residual(const PhaseMatrix& m, const PhysicalConstants& k) {
  const PhaseMatrix g = quadratic_metric(k);
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff() * m.cwiseAbs().maxCoeff()) *
                       std::max(1.0, g.cwiseAbs().maxCoeff());
  return (m.transpose() * g * m - g).cwiseAbs().maxCoeff() / scale;
}

PhaseState newtonian_limit(const PhaseState& s, const Vec3& beta, const Vec3& gamma) {
  PhaseState out = s;
  const Vec3 q = s.segment<3>(Q);
  const Vec3 p = s.segment<3>(P);
  out[E] = s[E] - gamma.dot(q) + beta.dot(p);
  out.segment<3>(Q) = q + beta * s[T];
  out.segment<3>(P) = p + gamma * s[T];
  return out;
}

double newtonian_deviation(const PhaseState& s, const Vec3& beta, const Vec3& gamma, double scale) {
  if (!(scale > 1.0)) throw Error(ErrorKind::InvalidArgument, "scale must exceed 1");
  PhysicalConstants k;
  k.c = scale;
  k.b = scale;
  return (pure_boost(s, beta, gamma, k) - newtonian_limit(s, beta, gamma)).cwiseAbs().maxCoeff();
}

}  // namespace canon
