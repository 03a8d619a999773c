#include "canon/lie_algebra.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "canon/error.hpp"
#include "canon/group_core.hpp"

namespace canon {

namespace {

int eta(int a, int b) { return a == b ? (a == 0 ? -1 : 1) : 0; }

using Table = std::array<std::array<std::vector<std::pair<int, int>>, kAlgebraDim>, kAlgebraDim>;

void put(Table& t, int i, int j, int k, int coeff) {
  if (coeff == 0) return;
  t[i][j].emplace_back(k, coeff);
  t[j][i].emplace_back(k, -coeff);
}

Table build_table() {
  Table t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const int zab = z_index(a, b);
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const int zcd = z_index(c, d);
          if (zcd <= zab) continue;
          // [Z_ab, Z_cd] = eta_bc Z_ad - eta_ad Z_cb
          std::map<int, int> acc;
          acc[z_index(a, d)] += eta(b, c);
          acc[z_index(c, b)] -= eta(a, d);
          for (auto [k, v] : acc) put(t, zab, zcd, k, v);
        }
      for (int c = 0; c < 4; ++c) {
        // [Z_ab, A+_c] = -eta_ac A+_b ; [Z_ab, A-_c] = +eta_bc A-_a
        put(t, zab, raise_index(c), raise_index(b), -eta(a, c));
        put(t, zab, lower_index(c), lower_index(a), eta(b, c));
      }
    }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) put(t, raise_index(a), lower_index(b), kCentralIndex, eta(a, b));
  return t;
}

QComplex inverse(const QComplex& z) {
  const mpq_class n = z.re * z.re + z.im * z.im;
  return {z.re / n, -z.im / n};
}

}  // namespace

std::string basis_name(int k) {
  if (k < 0 || k >= kAlgebraDim) throw Error(ErrorKind::InvalidArgument, "basis index out of range");
  if (k < 16) return "Z" + std::to_string(k / 4) + std::to_string(k % 4);
  if (k < 20) return "A+" + std::to_string(k - 16);
  if (k < 24) return "A-" + std::to_string(k - 20);
  return "I";
}

const std::vector<std::pair<int, int>>& structure(int i, int j) {
  static const Table table = build_table();
  return table.at(i).at(j);
}

bool is_zero(const ExactVector& v) {
  for (const auto& x : v.c)
    if (!x.is_zero()) return false;
  return true;
}

ExactVector y_generator() {
  ExactVector y;
  for (int a = 0; a < 4; ++a) y[z_index(a, a)] = QComplex(eta(a, a));
  return y;
}

ExactVector hat_z(int a, int b) {
  ExactVector v = ExactVector::basis(z_index(a, b));
  if (a == b) {
    ExactVector y = y_generator();
    y *= QComplex(mpq_class(eta(a, b), 4));
    v -= y;
  }
  return v;
}

FockOperator realize_basis(int k, int degree_cap, const mpq_class& kappa0) {
  if (degree_cap < 2)
    throw Error(ErrorKind::InsufficientTruncation, "degree cap must be at least 2");
  const FockBasis& basis = FockBasis::get(degree_cap);
  if (k == kCentralIndex) return FockOperator::identity(degree_cap, QComplex(kappa0));
  FockOperator op(degree_cap);
  for (int j = 0; j < basis.size(); ++j) {
    MultiIndex m = basis.multi_index(j);
    if (k >= 16 && k < 20) {
      const int a = k - 16;
      ++m[a];
      const int row = basis.find(m);
      if (row >= 0) op.add(row, j, QComplex(1));
    } else if (k >= 20) {
      const int a = k - 20;
      if (m[a] == 0) continue;
      const mpq_class coeff = -kappa0 * eta(a, a) * m[a];
      --m[a];
      op.add(basis.find(m), j, QComplex(coeff));
    } else {
      const int a = k / 4;
      const int b = k % 4;
      if (m[a] == 0) continue;
      const long coeff = -static_cast<long>(eta(a, a)) * m[a];
      --m[a];
      ++m[b];
      const int row = basis.find(m);
      if (row >= 0) op.add(row, j, QComplex(coeff));
    }
  }
  return op;
}

FockOperator realize_fock(const ExactVector& x, int degree_cap, const mpq_class& kappa0) {
  if (degree_cap < 2)
    throw Error(ErrorKind::InsufficientTruncation, "degree cap must be at least 2");
  FockOperator out(degree_cap);
  for (int k = 0; k < kAlgebraDim; ++k)
    if (!x[k].is_zero()) out += realize_basis(k, degree_cap, kappa0) * x[k];
  return out;
}

OperatorMatrix casimir_w(int degree_cap, const mpq_class& kappa0) {
  std::array<FockOperator, 4> raise, lower;
  for (int a = 0; a < 4; ++a) {
    raise[a] = realize_basis(raise_index(a), degree_cap, kappa0);
    lower[a] = realize_basis(lower_index(a), degree_cap, kappa0);
  }
  OperatorMatrix w;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      w[a][b] = raise[b] * lower[a] -
                realize_basis(z_index(a, b), degree_cap, kappa0) * QComplex(kappa0);
  return w;
}

FockOperator casimir_operator(int order, int degree_cap, const mpq_class& kappa0,
                              int column_degree) {
  if (order == 1) {
    FockOperator c = realize_basis(kCentralIndex, degree_cap, kappa0);
    return column_degree >= 0 ? c.restricted(column_degree) : c;
  }
  if (order != 2 && order != 4 && order != 6 && order != 8)
    throw Error(ErrorKind::InvalidArgument, "Casimir order must be one of 1, 2, 4, 6, 8");
  if (degree_cap < order)
    throw Error(ErrorKind::InsufficientTruncation,
                "degree cap must be at least the Casimir order");
  // V_ab = W_ab eta_bb; c_{2k} = tr V^k with products in index order.
  OperatorMatrix v = casimir_w(degree_cap, kappa0);
  for (int a = 0; a < 4; ++a) v[a][0] *= QComplex(-1);
  if (column_degree >= 0)
    for (auto& row : v)
      for (auto& op : row) op = op.restricted(column_degree);
  OperatorMatrix power = v;
  for (int step = 1; step < order / 2; ++step) {
    OperatorMatrix next;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c) {
        FockOperator acc(degree_cap);
        for (int b = 0; b < 4; ++b) acc += power[a][b] * v[b][c];
        next[a][c] = std::move(acc);
      }
    power = std::move(next);
  }
  FockOperator trace(degree_cap);
  for (int a = 0; a < 4; ++a) trace += power[a][a];
  return trace;
}

int casimir_safe_degree(int order, int degree_cap) {
  return std::max(-1, degree_cap - std::max(order, 2));
}

FockOperator casimir2_dimensioned(int degree_cap, const mpq_class& kappa0) {
  // sqrt(2) T = A+0 + A-0, sqrt(2) i E = A+0 - A-0, and likewise Q_i, P_i.
  FockOperator quad(degree_cap);
  for (int a = 0; a < 4; ++a) {
    const FockOperator ap = realize_basis(raise_index(a), degree_cap, kappa0);
    const FockOperator am = realize_basis(lower_index(a), degree_cap, kappa0);
    const FockOperator sum = ap + am;
    const FockOperator diff = ap - am;
    // T^2 + E^2 for a = 0, Q_a^2 + P_a^2 otherwise.
    FockOperator pair = (sum * sum - diff * diff) * QComplex(mpq_class(1, 2));
    if (a == 0) quad += pair;
    else quad -= pair;
  }
  const FockOperator y = realize_fock(y_generator(), degree_cap, kappa0);
  const FockOperator id = FockOperator::identity(degree_cap);
  FockOperator inner = quad + (y - id * QComplex(2)) * QComplex(2 * kappa0);
  return inner * QComplex(mpq_class(-1, 2));
}

std::map<std::string, NumericVector> dimensioned_basis(const PhysicalConstants& k) {
  k.validate();
  using C = std::complex<double>;
  const C i(0, 1);
  const double r2 = std::sqrt(2.0);
  auto e = [](int idx) { return NumericVector::basis(idx); };
  auto z = [&](int a, int b) { return e(z_index(a, b)); };
  std::map<std::string, NumericVector> out;
  out["T"] = C(k.lambda_t() / r2) * (e(raise_index(0)) + e(lower_index(0)));
  out["E"] = C(k.lambda_e() / r2) / i * (e(raise_index(0)) - e(lower_index(0)));
  for (int a = 1; a <= 3; ++a) {
    const std::string s = std::to_string(a);
    out["Q" + s] = C(k.lambda_q() / r2) * (e(raise_index(a)) + e(lower_index(a)));
    out["P" + s] = C(k.lambda_p() / r2) / i * (e(raise_index(a)) - e(lower_index(a)));
    out["N" + s] = C(k.b / 2) * (z(a, 0) + z(0, a));
    out["K" + s] = C(0, -k.c / 2) * (z(0, a) - z(a, 0));
    for (int b = 1; b <= 3; ++b)
      out["M" + s + std::to_string(b)] = C(k.b * k.c / 2) * (z(a, b) + z(b, a));
  }
  for (int kk = 1; kk <= 3; ++kk) {
    NumericVector j;
    const int i1 = kk % 3 + 1;
    const int i2 = (kk + 1) % 3 + 1;
    // (i/2) eps_ijk Z_ij
    j = C(0, 0.5) * (z(i1, i2) - z(i2, i1));
    out["J" + std::to_string(kk)] = j;
  }
  NumericVector y = C(-1) * z(0, 0);
  for (int a = 1; a <= 3; ++a) y += z(a, a);
  out["Y"] = C(k.b * k.c) * y;
  return out;
}

double span_residual(const std::vector<NumericVector>& span, const NumericVector& target) {
  Eigen::MatrixXcd a(kAlgebraDim, static_cast<Eigen::Index>(span.size()));
  Eigen::VectorXcd rhs(kAlgebraDim);
  for (int r = 0; r < kAlgebraDim; ++r) {
    for (std::size_t c = 0; c < span.size(); ++c) a(r, static_cast<Eigen::Index>(c)) = span[c][r];
    rhs(r) = target[r];
  }
  const Eigen::VectorXcd x = a.completeOrthogonalDecomposition().solve(rhs);
  return (a * x - rhs).norm();
}

bool expand_in_span(const std::vector<ExactVector>& span, const ExactVector& v,
                    std::vector<QComplex>* coeffs) {
  const int n = static_cast<int>(span.size());
  // Augmented matrix rows = algebra components, columns = span members + rhs.
  std::vector<std::vector<QComplex>> m(kAlgebraDim, std::vector<QComplex>(n + 1));
  for (int r = 0; r < kAlgebraDim; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = span[c][r];
    m[r][n] = v[r];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < kAlgebraDim; ++c) {
    int p = row;
    while (p < kAlgebraDim && m[p][c].is_zero()) ++p;
    if (p == kAlgebraDim) continue;
    std::swap(m[p], m[row]);
    const QComplex inv = inverse(m[row][c]);
    for (auto& x : m[row]) x *= inv;
    for (int r = 0; r < kAlgebraDim; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const QComplex f = m[r][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < kAlgebraDim; ++r)
    if (!m[r][n].is_zero()) return false;
  if (coeffs) {
    coeffs->assign(n, QComplex());
    for (int r = 0; r < row; ++r) (*coeffs)[pivot_col[r]] = m[r][n];
  }
  return true;
}

FrameSubalgebra frame_subalgebra(FrameKind kind) {
  FrameSubalgebra f;
  f.kind = kind;
  auto add = [&](std::string name, ExactVector v) {
    f.names.push_back(std::move(name));
    f.generators.push_back(std::move(v));
  };
  const auto e = [](int k) { return ExactVector::basis(k); };
  const QComplex half(mpq_class(1, 2));
  if (kind == FrameKind::Rest) {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) add("Zh" + std::to_string(i) + std::to_string(j), hat_z(i, j));
    add("A+0", e(raise_index(0)));
    add("A-0", e(lower_index(0)));
    add("Y", y_generator());
    add("I", e(kCentralIndex));
  } else {
    add("Ao+", half * (e(raise_index(3)) - e(raise_index(0))));
    add("Ao-", half * (e(lower_index(3)) - e(lower_index(0))));
    add("Y", y_generator());
    for (int i = 1; i <= 2; ++i) {
      add("C+" + std::to_string(i), e(z_index(i, 0)) - e(z_index(i, 3)));
      add("C-" + std::to_string(i), e(z_index(0, i)) - e(z_index(3, i)));
    }
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) add("Z" + std::to_string(i) + std::to_string(j), e(z_index(i, j)));
    add("Io", e(z_index(0, 3)) + e(z_index(3, 0)) - e(z_index(0, 0)) - e(z_index(3, 3)));
    add("I", e(kCentralIndex));
  }
  const int n = static_cast<int>(f.generators.size());
  f.table.assign(n, std::vector<std::vector<std::pair<int, QComplex>>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<QComplex> coeffs;
      if (!expand_in_span(f.generators, bracket(f.generators[i], f.generators[j]), &coeffs)) {
        f.closed = false;
        continue;
      }
      for (int k = 0; k < n; ++k)
        if (!coeffs[k].is_zero()) f.table[i][j].emplace_back(k, coeffs[k]);
    }
  return f;
}

FockOperator rest_casimir(int order, int degree_cap, const mpq_class& kappa0) {
  const FockOperator ap = realize_basis(raise_index(0), degree_cap, kappa0);
  const FockOperator am = realize_basis(lower_index(0), degree_cap, kappa0);
  const FockOperator y = realize_fock(y_generator(), degree_cap, kappa0);
  const FockOperator c2 = ap * am + y * QComplex(kappa0);
  if (order == 2) return c2;
  if (order != 4) throw Error(ErrorKind::InvalidArgument, "rest-frame Casimir order must be 2 or 4");
  FockOperator zz(degree_cap);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      zz += realize_basis(z_index(i, j), degree_cap, kappa0) *
            realize_basis(z_index(j, i), degree_cap, kappa0);
  return c2 * c2 + zz * QComplex(kappa0 * kappa0);
}

FockOperator null_casimir(int degree_cap, const mpq_class& kappa0) {
  const QComplex half(mpq_class(1, 2));
  const ExactVector ap = half * (ExactVector::basis(raise_index(3)) - ExactVector::basis(raise_index(0)));
  const ExactVector am = half * (ExactVector::basis(lower_index(3)) - ExactVector::basis(lower_index(0)));
  return realize_fock(ap, degree_cap, kappa0) * realize_fock(am, degree_cap, kappa0);
}

}  // namespace canon
