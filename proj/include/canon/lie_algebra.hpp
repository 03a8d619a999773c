#pragma once

// The 25-dimensional algebra of C(1,3), its realization on truncated Fock
// space, Casimir operators and the rest/null frame subalgebras.
//
// Basis order: Z_ab at index 4a+b, A+_a at 16+a, A-_a at 20+a, I at 24.

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "canon/constants.hpp"
#include "canon/fock_operator.hpp"
#include "canon/rational.hpp"

namespace canon {

inline constexpr int kAlgebraDim = 25;

constexpr int z_index(int a, int b) { return 4 * a + b; }
constexpr int raise_index(int a) { return 16 + a; }
constexpr int lower_index(int a) { return 20 + a; }
inline constexpr int kCentralIndex = 24;

/// "Z01", "A+2", "A-0", "I".
std::string basis_name(int k);

/// Structure constants: [e_i, e_j] = sum coeff * e_k (integer coefficients).
const std::vector<std::pair<int, int>>& structure(int i, int j);

template <class S>
struct AlgebraVector {
  std::array<S, kAlgebraDim> c{};

  static AlgebraVector basis(int k) {
    AlgebraVector v;
    v.c[k] = S(1);
    return v;
  }
  S& operator[](int k) { return c[k]; }
  const S& operator[](int k) const { return c[k]; }

  AlgebraVector& operator+=(const AlgebraVector& o) {
    for (int k = 0; k < kAlgebraDim; ++k) c[k] += o.c[k];
    return *this;
  }
  AlgebraVector& operator-=(const AlgebraVector& o) {
    for (int k = 0; k < kAlgebraDim; ++k) c[k] -= o.c[k];
    return *this;
  }
  AlgebraVector& operator*=(const S& s) {
    for (auto& x : c) x *= s;
    return *this;
  }
  friend AlgebraVector operator+(AlgebraVector a, const AlgebraVector& b) { return a += b; }
  friend AlgebraVector operator-(AlgebraVector a, const AlgebraVector& b) { return a -= b; }
  friend AlgebraVector operator*(const S& s, AlgebraVector a) { return a *= s; }
  friend bool operator==(const AlgebraVector& a, const AlgebraVector& b) { return a.c == b.c; }
};

using ExactVector = AlgebraVector<QComplex>;
using NumericVector = AlgebraVector<std::complex<double>>;

template <class S>
AlgebraVector<S> bracket(const AlgebraVector<S>& x, const AlgebraVector<S>& y) {
  AlgebraVector<S> out;
  for (int i = 0; i < kAlgebraDim; ++i) {
    if (x.c[i] == S(0)) continue;
    for (int j = 0; j < kAlgebraDim; ++j) {
      if (y.c[j] == S(0)) continue;
      const S xy = x.c[i] * y.c[j];
      for (const auto& [k, coeff] : structure(i, j)) out.c[k] += S(coeff) * xy;
    }
  }
  return out;
}

bool is_zero(const ExactVector& v);
ExactVector hat_z(int a, int b);  // Z_ab - eta_ab Y / 4
ExactVector y_generator();        // eta^{ab} Z_ab

/// Realization on z^m, |m| <= N:
///   A+_a = z^a,  A-_a = -kappa0 eta_aa d/dz^a,  Z_ab = -eta_aa z^b d/dz^a,  I = kappa0.
/// Brackets are reproduced exactly on inputs of degree <= N - 2.
FockOperator realize_fock(const ExactVector& x, int degree_cap,
                          const mpq_class& kappa0 = 1);
FockOperator realize_basis(int k, int degree_cap, const mpq_class& kappa0 = 1);

/// W_ab = A+_b A-_a - I Z_ab as realized operators, indexed [a][b].
using OperatorMatrix = std::array<std::array<FockOperator, 4>, 4>;
OperatorMatrix casimir_w(int degree_cap, const mpq_class& kappa0 = 1);

/// c_1 = I, c_{2k} = eta-contracted trace of W^k (orders 1, 2, 4, 6, 8).
/// W preserves degree, so when column_degree >= 0 only the columns of inputs
/// with degree <= column_degree are built (they are exact).
FockOperator casimir_operator(int order, int degree_cap, const mpq_class& kappa0 = 1,
                              int column_degree = -1);
/// Largest input degree on which `casimir_operator(order)` commutator checks are exact.
int casimir_safe_degree(int order, int degree_cap);

/// -(1/2)(T^2 + E^2 - Q^2 - P^2 + 2I(Y - 2)) with c = b = hbar = 1.
FockOperator casimir2_dimensioned(int degree_cap, const mpq_class& kappa0 = 1);

/// Physical generators T, E, Q1..3, P1..3, K1..3, N1..3, J1..3, M11..M33, Y over the abstract basis.
std::map<std::string, NumericVector> dimensioned_basis(const PhysicalConstants& k);

/// Least-squares expansion of `target` over `span`; returns the residual norm.
double span_residual(const std::vector<NumericVector>& span, const NumericVector& target);

enum class FrameKind { Rest, Null };

struct FrameSubalgebra {
  FrameKind kind;
  std::vector<std::string> names;
  std::vector<ExactVector> generators;
  /// bracket[i][j] expanded over `generators`, or empty when it leaves the span.
  std::vector<std::vector<std::vector<std::pair<int, QComplex>>>> table;
  bool closed = true;
};

FrameSubalgebra frame_subalgebra(FrameKind kind);

/// Rest-frame Casimirs realized on Fock space: c2 = A+0 A-0 + I Y and
/// c4 = c2^2 + I^2 sum_ij Z_ij Z_ji (spatial i, j).
FockOperator rest_casimir(int order, int degree_cap, const mpq_class& kappa0 = 1);
/// Null-frame Casimir A°+ A°-.
FockOperator null_casimir(int degree_cap, const mpq_class& kappa0 = 1);

/// Expansion of v over a linearly independent family (exact Gaussian elimination).
bool expand_in_span(const std::vector<ExactVector>& span, const ExactVector& v,
                    std::vector<QComplex>* coeffs);

}  // namespace canon
