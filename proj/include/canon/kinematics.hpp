#pragma once

// Reciprocal-relativity transformations of phase states (t, e, q, p).

#include <Eigen/Dense>

#include "canon/constants.hpp"

namespace canon {

/// (t, e, q1, q2, q3, p1, p2, p3).
using PhaseState = Eigen::Matrix<double, 8, 1>;
using PhaseMatrix = Eigen::Matrix<double, 8, 8>;
using Vec3 = Eigen::Vector3d;

struct BoostParams {
  Vec3 beta = Vec3::Zero();
  Vec3 gamma = Vec3::Zero();
  Vec3 alpha = Vec3::Zero();
  /// Symmetric position-momentum mixer.
  Eigen::Matrix3d theta = Eigen::Matrix3d::Zero();
  double vartheta = 0.0;
};

/// First-order law s' = s + G s:
///   t' = t + beta.q/c^2 + gamma.p/b^2 + vartheta e/(c^2 b^2)
///   e' = e - gamma.q + beta.p - vartheta t
///   q' = q + alpha x q + beta t - gamma e/b^2 - theta p/b^2
///   p' = p + alpha x p + beta e/c^2 + gamma t + theta q/c^2
PhaseMatrix generator(const BoostParams& params, const PhysicalConstants& k = {});
PhaseState infinitesimal_transform(const PhaseState& s, const BoostParams& params,
                                   const PhysicalConstants& k = {});

/// zeta = sqrt(beta.beta / c^2 + gamma.gamma / b^2).
double rapidity(const Vec3& beta, const Vec3& gamma, const PhysicalConstants& k = {});

/// exp(G) = I + (sinh zeta / zeta) G + ((cosh zeta - 1) / zeta^2) G^2 for a pure boost,
/// using G^3 = zeta^2 G.
PhaseMatrix pure_boost_matrix(const Vec3& beta, const Vec3& gamma, const PhysicalConstants& k = {});
PhaseState pure_boost(const PhaseState& s, const Vec3& beta, const Vec3& gamma,
                      const PhysicalConstants& k = {});
/// The component-wise closed form without the q-p cross terms; equals
/// pure_boost_matrix when beta and gamma are parallel.
PhaseMatrix pure_boost_matrix_componentwise(const Vec3& beta, const Vec3& gamma,
                                            const PhysicalConstants& k = {});

/// t^2 + e^2/(c^2 b^2) - q^2/c^2 - p^2/b^2.
double quadratic_form(const PhaseState& s, const PhysicalConstants& k = {});
/// Diagonal metric of `quadratic_form`.
PhaseMatrix quadratic_metric(const PhysicalConstants& k = {});
/// Matrix of -de^dt + dp_i^dq_i.
PhaseMatrix symplectic_form();

/// max |M^T J M - J| and max |M^T G M - G| / max(1, |M|^2).
double symplectic_residual(const PhaseMatrix& m);
double quadratic_residual(const PhaseMatrix& m, const PhysicalConstants& k = {});

/// t' = t, e' = e - gamma.q + beta.p, q' = q + beta t, p' = p + gamma t.
PhaseState newtonian_limit(const PhaseState& s, const Vec3& beta, const Vec3& gamma);
/// Max componentwise |pure_boost - newtonian_limit| with c = b = scale.
double newtonian_deviation(const PhaseState& s, const Vec3& beta, const Vec3& gamma, double scale);

}  // namespace canon
