#include <doctest.h>

#include <random>

#include "canon/error.hpp"
#include "canon/kinematics.hpp"
#include "oracles.hpp"

using namespace canon;

namespace {

PhaseState state(std::initializer_list<double> v) {
  PhaseState s;
  int i = 0;
  for (double x : v) s[i++] = x;
  return s;
}

}  // namespace

TEST_CASE("zero parameters leave the state unchanged") {
  const PhaseState s = state({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(infinitesimal_transform(s, BoostParams{}) == s);
  CHECK(pure_boost(s, Vec3::Zero(), Vec3::Zero()) == s);
}

TEST_CASE("vartheta terms of the generator") {
  const PhysicalConstants k{2.0, 3.0, 1.0};
  BoostParams p;
  p.vartheta = 0.5;
  const PhaseState s = state({1, 2, 3, 4, 5, 6, 7, 8});
  const PhaseState o = infinitesimal_transform(s, p, k);
  CHECK(o[0] == doctest::Approx(1 + 0.5 * 2 / 36.0));
  CHECK(o[1] == doctest::Approx(2 - 0.5 * 1));
  for (int i = 2; i < 8; ++i) CHECK(o[i] == s[i]);
}

TEST_CASE("rotation generator acts on q and p only") {
  BoostParams p;
  p.alpha = Vec3(0, 0, 0.1);
  const PhaseState s = state({1, 2, 1, 0, 0, 0, 1, 0});
  const PhaseState o = infinitesimal_transform(s, p);
  CHECK(o[0] == 1);
  CHECK(o[1] == 2);
  CHECK(o[2] == doctest::Approx(1));
  CHECK(o[3] == doctest::Approx(0.1));
  CHECK(o[5] == doctest::Approx(-0.1));
  CHECK(o[6] == doctest::Approx(1));
}

TEST_CASE("non-symmetric theta is rejected") {
  BoostParams p;
  p.theta(0, 1) = 1.0;
  CHECK_THROWS_AS(generator(p), Error);
}

TEST_CASE("rapidity of a unit example") {
  CHECK(rapidity(Vec3(0.6, 0, 0), Vec3(0.8, 0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("pure x boost of a time-like event") {
  const PhaseState o = pure_boost(state({1, 0, 0, 0, 0, 0, 0, 0}), Vec3(0.6, 0, 0), Vec3::Zero());
  CHECK(o[0] == doctest::Approx(std::cosh(0.6)));
  CHECK(o[2] == doctest::Approx(std::sinh(0.6)));
  CHECK(o[5] == doctest::Approx(0.0));
}

TEST_CASE("closed form matches an independent series") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 100; ++i) {
    const PhysicalConstants k{0.5 + std::abs(nd(rng)), 0.5 + std::abs(nd(rng)), 1.0};
    BoostParams p;
    p.beta = Vec3(nd(rng), nd(rng), nd(rng)) * k.c;
    p.gamma = Vec3(nd(rng), nd(rng), nd(rng)) * k.b;
    const PhaseMatrix e = oracle::expm(generator(p, k));
    CHECK((pure_boost_matrix(p.beta, p.gamma, k) - e).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, e.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("forms are preserved") {
  const PhysicalConstants k{2.0, 0.5, 1.0};
  const PhaseMatrix m = pure_boost_matrix(Vec3(0.3, -1, 0.2), Vec3(0.1, 0.4, -0.2), k);
  CHECK(symplectic_residual(m) < 1e-12);
  CHECK(quadratic_residual(m, k) < 1e-12);
}

TEST_CASE("Newtonian limit law") {
  const PhaseState o = newtonian_limit(state({1, 0, 1, 0, 0, 1, 0, 0}), Vec3(1, 0, 0), Vec3(2, 0, 0));
  CHECK(o[0] == 1);
  CHECK(o[1] == -1);
  CHECK(o[2] == 2);
  CHECK(o[5] == 3);
  CHECK(newtonian_deviation(state({1, 2, 3, 4, 5, 6, 7, 8}), Vec3::Zero(), Vec3::Zero(), 1e3) == 0.0);
}

TEST_CASE("Newtonian deviation falls off as the inverse square of the scale") {
  const PhaseState s = state({1, 0.5, -0.2, 0.3, 1, 2, -1, 0.4});
  const double r = newtonian_deviation(s, Vec3(0.3, 0.1, 0), Vec3(0, 0.2, 0.5), 1e3) /
                   newtonian_deviation(s, Vec3(0.3, 0.1, 0), Vec3(0, 0.2, 0.5), 1e4);
  CHECK(r > 50);
  CHECK(r < 200);
}
