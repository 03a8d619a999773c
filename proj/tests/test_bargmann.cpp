#include <doctest.h>

#include <numbers>

#include "canon/error.hpp"
#include "canon/fock_bargmann.hpp"
#include "canon/quadrature.hpp"
#include "oracles.hpp"

using namespace canon;

namespace {

constexpr cd kI(0, 1);

BargmannFunction xi(int a, int b, int c, int d) { return BargmannFunction::basis({a, b, c, d}); }

}  // namespace

TEST_CASE("Gauss-Hermite rule integrates low moments") {
  const auto& gh = gauss_hermite(20);
  double m0 = 0, m2 = 0, m4 = 0;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    m0 += gh.weights[i];
    m2 += gh.weights[i] * gh.nodes[i] * gh.nodes[i];
    m4 += gh.weights[i] * std::pow(gh.nodes[i], 4);
  }
  const double sp = std::sqrt(std::numbers::pi);
  CHECK(m0 == doctest::Approx(sp).epsilon(1e-14));
  CHECK(m2 == doctest::Approx(sp / 2).epsilon(1e-14));
  CHECK(m4 == doctest::Approx(3 * sp / 4).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_hermite(0), Error);
}

TEST_CASE("recurrence Hermite functions match explicit polynomials") {
  for (int k = 0; k <= 4; ++k)
    for (double x : {-2.5, -0.7, 0.0, 0.3, 1.9}) CHECK(hermite_function(k, x) == doctest::Approx(oracle::hermite(k, x)).epsilon(1e-13));
}

TEST_CASE("vacuum normalization and a small orthogonality case") {
  CHECK(std::abs(bargmann_inner(xi(0, 0, 0, 0), xi(0, 0, 0, 0)) - 1.0) < 1e-14);
  const auto f = xi(1, 0, 0, 0) + xi(0, 1, 0, 0);
  const auto h = xi(1, 0, 0, 0) + cd(-1) * xi(0, 1, 0, 0);
  CHECK(std::abs(bargmann_inner(f, h)) < 1e-14);
  CHECK(std::abs(bargmann_inner(f, f) - 2.0) < 1e-13);
}

TEST_CASE("too coarse a grid is refused") {
  CHECK_THROWS_AS(bargmann_inner(xi(5, 0, 0, 0), xi(5, 0, 0, 0), {3}), Error);
}

TEST_CASE("transform of the vacuum is the Gaussian ground state") {
  const auto psi = to_position(xi(0, 0, 0, 0));
  for (double s : {-1.0, 0.0, 0.4}) {
    const R4 x(s, 0.5 * s, -0.2, 1.1);
    const double expected = std::pow(std::numbers::pi, -1.0) * std::exp(-x.squaredNorm() / 2);
    CHECK(std::abs(psi(x) - expected) < 1e-8);
  }
}

TEST_CASE("transform of basis functions gives Hermite functions") {
  for (const MultiIndex m : {MultiIndex{1, 0, 0, 0}, MultiIndex{0, 2, 1, 0}, MultiIndex{3, 0, 0, 0}, MultiIndex{0, 0, 1, 2}}) {
    const auto psi = to_position(BargmannFunction::basis(m));
    const auto ref = PositionFunction::hermite(m);
    const cd d2 = position_inner(psi, psi, 12) - position_inner(psi, ref, 12) - position_inner(ref, psi, 12) +
                  position_inner(ref, ref, 12);
    CHECK(std::sqrt(std::abs(d2)) < 1e-6);
    const R4 x(0.3, -0.8, 1.2, 0.1);
    cd explicit_value = 1.0;
    for (int a = 0; a < 4; ++a) explicit_value *= oracle::hermite(m[a], x[a]);
    CHECK(std::abs(psi(x) - explicit_value) < 1e-8);
  }
}

TEST_CASE("diagonal set names") {
  for (const char* s : {"QT", "PT", "PE", "QE"}) CHECK(std::string(to_string(parse_diagonal_set(s))) == s);
  CHECK_THROWS_AS(parse_diagonal_set("XY"), Error);
}

TEST_CASE("Weyl-Heisenberg action special cases") {
  const auto f = xi(1, 0, 2, 0) + cd(0.5, -1) * xi(0, 1, 0, 1);
  C4 z;
  z << cd(0.3, 0.1), cd(-0.2, 0.4), cd(0.5, 0), cd(0, -0.6);
  const auto g = CanonicalElement::heisenberg(C4::Zero(), 0.8);
  for (double k0 : {1.0, -2.0}) CHECK(std::abs(rep_weyl_heisenberg(k0, g)(f)(z) - std::exp(kI * k0 * 0.8) * f(z)) < 1e-14);
  CHECK(std::abs(rep_weyl_heisenberg(1.0, CanonicalElement::identity())(f)(z) - f(z)) < 1e-15);
}

TEST_CASE("oscillator action special cases") {
  const auto f = xi(1, 0, 2, 0) + cd(0.5, -1) * xi(0, 1, 0, 1);
  C4 z, w;
  z << cd(0.3, 0.1), cd(-0.2, 0.4), cd(0.5, 0), cd(0, -0.6);
  w << cd(0.1, 0.2), 0.3, cd(0, -0.4), 0.1;
  const double th = 0.6;
  CHECK(std::abs(rep_oscillator(1.0, 2, th, C4::Zero(), 0)(f)(z) - std::exp(-kI * 2.0 * th) * f(std::exp(-kI * th) * z)) < 1e-14);
  const auto osc = rep_oscillator(1.0, 2, 0.0, w, 0.3)(f)(z);
  const auto wh = rep_weyl_heisenberg(1.0, CanonicalElement::heisenberg(w, 0.3))(f)(z);
  CHECK(std::abs(osc - wh) < 1e-14);
}

TEST_CASE("canonical action special cases") {
  const auto f = xi(1, 1, 0, 0) + xi(0, 0, 0, 2);
  Rng rng(3);
  const auto u = random_u13(rng);
  C4 z = random_c4(rng, 0.5);
  const auto rotated = rep_canonical(1.0, CanonicalElement::homogeneous(u))(f)(z);
  CHECK(std::abs(rotated - f(u.inverse() * z)) < 1e-13);
  const auto h = CanonicalElement::heisenberg(random_c4(rng, 0.5), 0.2);
  CHECK(std::abs(rep_canonical(1.0, h)(f)(z) - rep_weyl_heisenberg(1.0, h)(f)(z)) < 1e-14);
}

TEST_CASE("positive pairing is not preserved by the Weyl-Heisenberg action") {
  C4 w = C4::Zero();
  w[0] = 0.5;
  const auto rho = rep_weyl_heisenberg(1.0, CanonicalElement::heisenberg(w, 0));
  const auto f = xi(0, 0, 0, 0);
  CHECK(std::abs(bargmann_inner(rho(f), rho(f), {64}) - 1.0) > 1e-3);
  CHECK(std::abs(bargmann_eta_inner(rho(f), rho(f), {64}) - bargmann_eta_inner(f, f)) < 1e-10);
}

TEST_CASE("generic functions cannot be transformed") {
  const auto g = BargmannFunction::generic([](const C4& z) { return z[0] * z[1]; });
  CHECK_THROWS_AS(to_position(g), Error);
}
