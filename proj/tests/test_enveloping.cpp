#include <doctest.h>

#include "canon/enveloping.hpp"

using namespace canon;

namespace {

UElement gen(int k) { return UElement::generator(k); }

}  // namespace

TEST_CASE("generator products are PBW ordered") {
  EnvelopingAlgebra u;
  const int ap = raise_index(0), am = lower_index(0);
  // A-0 A+0 = A+0 A-0 + [A-0, A+0]
  UElement expected = u.multiply(gen(ap), gen(am));
  for (const auto& [k, c] : structure(am, ap)) expected += gen(k) * QComplex(c);
  CHECK(u.multiply(gen(am), gen(ap)) == expected);
  for (const auto& [m, c] : u.multiply(gen(am), gen(ap)).terms())
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(m[i - 1] <= m[i]);
}

TEST_CASE("commutators of generators reproduce the structure constants") {
  EnvelopingAlgebra u;
  for (int i = 0; i < kAlgebraDim; ++i)
    for (int j = 0; j < kAlgebraDim; ++j) {
      UElement expected;
      for (const auto& [k, c] : structure(i, j)) expected += gen(k) * QComplex(c);
      CHECK(u.commutator(gen(i), gen(j)) == expected);
    }
}

TEST_CASE("multiplication is associative on sampled triples") {
  EnvelopingAlgebra u;
  const UElement a = gen(z_index(0, 1)) + gen(raise_index(2));
  const UElement b = gen(lower_index(0)) * QComplex(mpq_class(1, 3)) + gen(z_index(3, 2));
  const UElement c = gen(lower_index(1)) + gen(raise_index(0)) + gen(z_index(1, 0));
  CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
}

TEST_CASE("Casimirs are non-zero and central") {
  EnvelopingAlgebra u;
  for (int order : {1, 2, 4}) {
    const UElement c = u.casimir(order);
    CHECK_FALSE(c.is_zero());
    CHECK(c.degree() == (order == 1 ? 1 : order));
    for (int k = 0; k < kAlgebraDim; ++k) CHECK(u.commutator(c, gen(k)).is_zero());
  }
  CHECK_THROWS(u.casimir(3));
}

TEST_CASE("a non-central quadratic element fails the centrality check") {
  EnvelopingAlgebra u;
  const UElement x = u.multiply(gen(raise_index(0)), gen(lower_index(0)));
  int failures = 0;
  for (int k = 0; k < kAlgebraDim; ++k) failures += !u.commutator(x, gen(k)).is_zero();
  CHECK(failures > 0);
}

TEST_CASE("c2 equals eta-weighted A+A- minus I Y") {
  EnvelopingAlgebra u;
  UElement expected = u.multiply(gen(kCentralIndex), UElement::from_vector(y_generator())) * QComplex(-1);
  for (int a = 0; a < 4; ++a)
    expected += u.multiply(gen(raise_index(a)), gen(lower_index(a))) * QComplex(a == 0 ? -1 : 1);
  CHECK(u.casimir(2) == expected);
  CHECK(u.casimir(2) == u.casimir2_dimensioned());
}
