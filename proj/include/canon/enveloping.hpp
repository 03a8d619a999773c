#pragma once

// Universal enveloping algebra of the 25-dimensional algebra, in the
// Poincare-Birkhoff-Witt basis of index-ordered monomials. The central
// generator I stays symbolic, so identities checked here hold for every
// representation, not only the Fock one (where W_ab vanishes identically).

#include <string>
#include <unordered_map>

#include "canon/lie_algebra.hpp"
#include "canon/rational.hpp"

namespace canon {

class EnvelopingAlgebra;

/// Linear combination of ordered monomials; a monomial is a non-decreasing
/// string of basis indices.
class UElement {
 public:
  using Terms = std::unordered_map<std::string, QComplex>;

  UElement() = default;
  static UElement scalar(const QComplex& c);
  static UElement generator(int k);
  static UElement from_vector(const ExactVector& v);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Largest monomial length.
  int degree() const;

  void add(const std::string& monomial, const QComplex& c);
  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  UElement& operator*=(const QComplex& s);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(UElement a, const QComplex& s) { return a *= s; }
  friend bool operator==(const UElement& a, const UElement& b) { return (a - b).is_zero(); }

 private:
  Terms terms_;
};

/// Multiplication with a memo of (monomial, generator) products.
class EnvelopingAlgebra {
 public:
  UElement multiply(const UElement& a, const UElement& b);
  UElement commutator(const UElement& a, const UElement& b);

  /// c_1 = I and c_{2k} = tr V^k with V_ab = W_ab eta_bb, W_ab = A+_b A-_a - I Z_ab.
  UElement casimir(int order);
  /// -(1/2)(T^2 + E^2 - Q^2 - P^2 + 2 I (Y - 2)) with c = b = hbar = 1.
  UElement casimir2_dimensioned();

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const UElement& times_generator(const std::string& monomial, int x);
  std::unordered_map<std::string, UElement> memo_;
};

}  // namespace canon
