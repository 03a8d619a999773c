#include <doctest.h>

#include "canon/error.hpp"
#include "canon/kinematics.hpp"
#include "canon/mackey_reps.hpp"

using namespace canon;

namespace {

constexpr cd kI(0, 1);

std::string orbit(const DualPoint& p) { return to_string(classify(p).label); }
std::string little(const DualPoint& p) { return to_string(classify(p).little_group); }

Lorentz x_boost(double xi) {
  Lorentz l = Lorentz::Identity();
  l(0, 0) = l(1, 1) = std::cosh(xi);
  l(0, 1) = l(1, 0) = std::sinh(xi);
  return l;
}

}  // namespace

TEST_CASE("orbit representatives") {
  CHECK(orbit(DualPoint::poincare(R4(1, 0, 0, 0))) == "O+");
  CHECK(little(DualPoint::poincare(R4(1, 0, 0, 0))) == "SO(3)");
  CHECK(orbit(DualPoint::poincare(R4(-1, 0, 0, 0))) == "O+");
  CHECK(orbit(DualPoint::poincare(R4(0, 1, 0, 0))) == "O-");
  CHECK(little(DualPoint::poincare(R4(0, 1, 0, 0))) == "SO(1,2)");
  CHECK(orbit(DualPoint::poincare(R4(1, 1, 0, 0))) == "O0");
  CHECK(orbit(DualPoint::poincare(R4(0, 0, 0, 0))) == "O^0");
  CHECK(orbit(DualPoint::heisenberg(R4(1, 2, 3, 4), 0.0)) == "O_u");
  CHECK(little(DualPoint::heisenberg(R4(1, 2, 3, 4), 0.0)) == "full");
  CHECK(orbit(DualPoint::heisenberg(R4(1, 2, 3, 4), 2.0)) == "O_kappa");
  CHECK(orbit(DualPoint::canonical(C4::Zero())) == "O^0");
  CHECK(little(DualPoint::canonical(C4::Zero())) == "U(1,3)");
  C4 w = C4::Zero();
  w[0] = 1;
  CHECK(orbit(DualPoint::canonical(w)) == "O+");
  CHECK(little(DualPoint::canonical(w)) == "U(3)");
}

TEST_CASE("random Lorentz matrices are proper orthochronous") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Lorentz l = random_lorentz(rng);
    CHECK(lorentz_residual(l) < 1e-12);
    CHECK(l(0, 0) >= 1.0);
    CHECK(l.determinant() == doctest::Approx(1.0));
  }
}

TEST_CASE("polar split of block diagonal U is trivial") {
  M4 u = M4::Zero();
  u(0, 0) = std::exp(kI * 0.3);
  u(1, 2) = 1;
  u(2, 1) = -1;
  u(3, 3) = kI;
  const auto s = polar_split(PseudoUnitaryMatrix(u));
  CHECK((s.boost.matrix() - M4::Identity()).norm() < 1e-12);
  CHECK((s.compact.matrix() - u).norm() < 1e-12);
}

TEST_CASE("polar split of a pure boost") {
  // A real boost along x is Hermitian and positive, so it is its own boost factor.
  const M4 u = x_boost(0.6).cast<cd>();
  const auto s = polar_split(PseudoUnitaryMatrix(u));
  CHECK((s.boost.matrix() - u).norm() < 1e-12);
  CHECK((s.compact.matrix() - M4::Identity()).norm() < 1e-12);
}

TEST_CASE("boost_to on the reference point and a Lorentz x boost") {
  C4 w = C4::Zero();
  w[0] = 2.0;
  CHECK((boost_to(DualPoint::canonical(w)).matrix() - M4::Identity()).norm() < 1e-14);
  const double xi = 0.7, mu = 1.5;
  const auto q = boost_to(DualPoint::poincare(R4(mu * std::cosh(xi), mu * std::sinh(xi), 0, 0)));
  CHECK((q.matrix() - x_boost(xi).cast<cd>()).norm() < 1e-12);
}

TEST_CASE("Wigner factor special cases") {
  Rng rng(6);
  C4 w = C4::Zero();
  w[0] = 1.0;
  M4 u = M4::Identity();
  u.block<3, 3>(1, 1) = random_u13(rng).matrix().block<3, 3>(1, 1);
  const auto r3 = polar_split(PseudoUnitaryMatrix::trusted(u)).compact.matrix();
  CHECK((wigner_rotation(r3, DualPoint::canonical(w)) - r3).norm() < 1e-12);
  const DualPoint p = DualPoint::poincare(R4(std::cosh(0.4), std::sinh(0.4), 0, 0));
  CHECK((wigner_rotation(x_boost(0.9).cast<cd>(), p) - M4::Identity()).norm() < 1e-12);
}

TEST_CASE("Poincare action special cases") {
  MassShellField f = [](const R4& k) {
    Eigen::VectorXcd v(1);
    v[0] = cd(k[1], k[2]);
    return v;
  };
  const R4 k(std::sqrt(1 + 0.25 + 0.04), 0.5, 0.2, 0.0);
  CHECK(std::abs(induced_rep_poincare(1.0, PoincareElement{}, f)(k)[0] - f(k)[0]) < 1e-15);
  PoincareElement t;
  t.x = R4(0.3, -1, 2, 0.5);
  const double kx = -k[0] * t.x[0] + k.tail<3>().dot(t.x.tail<3>());
  CHECK(std::abs(induced_rep_poincare(1.0, t, f)(k)[0] - std::exp(kI * kx) * f(k)[0]) < 1e-14);
  CHECK_THROWS_AS(induced_rep_poincare(1.0, t, f)(R4(1, 1, 1, 1)), Error);
}

TEST_CASE("Heisenberg evaluators special cases") {
  PositionRule f = [](const R4& x) { return cd(x[0], x[3]); };
  const R4 x(0.1, 0.2, 0.3, 0.4);
  const auto g = CanonicalElement::heisenberg(C4::Zero(), 0.9);
  CHECK(std::abs(induced_rep_heisenberg(2.0, g, f)(x) - std::exp(kI * 1.8) * f(x)) < 1e-15);
  CHECK(std::abs(character_heisenberg(R4(1, 2, 3, 4), R4(4, 3, 2, 1), g) - 1.0) < 1e-15);
  CircleRule h = [](double phi) { return cd(std::cos(phi), 2 * std::sin(phi)); };
  C4 wv, om;
  wv << 1, cd(0, 1), 0.5, 0;
  om << cd(0.3, 0.2), 0.1, cd(0, 1), 0.4;
  CHECK(std::abs(character_oscillator(wv, 0.0, om, h)(0.0) - character_w(wv, om) * h(0.0)) < 1e-14);
}
