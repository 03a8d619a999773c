#include "canon/gelfand_ladders.hpp"

#include <functional>

#include "canon/error.hpp"

namespace canon {

bool is_dominant(const Weight& m) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i - 1] < m[i]) return false;
  return !m.empty();
}

namespace {

void require_dominant(const Weight& m) {
  if (!is_dominant(m))
    throw Error(ErrorKind::InvalidArgument, "highest weight must be non-empty and weakly decreasing");
}

// All rows r of length |top|-1 with top[k] >= r[k] >= top[k+1].
void interlacing_rows(const Weight& top, std::size_t k, Weight& row, std::vector<Weight>& out) {
  if (k + 1 == top.size()) {
    out.push_back(row);
    return;
  }
  for (long v = top[k]; v >= top[k + 1]; --v) {
    row[k] = v;
    interlacing_rows(top, k + 1, row, out);
  }
}

void extend(GelfandPattern& p, std::vector<GelfandPattern>& out) {
  const Weight& last = p.rows.back();
  if (last.size() == 1) {
    out.push_back(p);
    return;
  }
  std::vector<Weight> rows;
  Weight row(last.size() - 1);
  interlacing_rows(last, 0, row, rows);
  for (const Weight& r : rows) {
    p.rows.push_back(r);
    extend(p, out);
    p.rows.pop_back();
  }
}

}  // namespace

std::vector<GelfandPattern> enumerate_patterns(const Weight& top) {
  require_dominant(top);
  std::vector<GelfandPattern> out;
  GelfandPattern p;
  p.rows.push_back(top);
  extend(p, out);
  return out;
}

bool satisfies_betweenness(const GelfandPattern& p) {
  for (std::size_t j = 1; j < p.rows.size(); ++j) {
    const Weight& up = p.rows[j - 1];
    const Weight& down = p.rows[j];
    if (down.size() + 1 != up.size()) return false;
    for (std::size_t k = 0; k < down.size(); ++k)
      if (!(up[k] >= down[k] && down[k] >= up[k + 1])) return false;
  }
  return !p.rows.empty() && p.rows.back().size() == 1;
}

long weyl_dimension(const Weight& m) {
  require_dominant(m);
  // Accumulate numerator and denominator separately; the quotient is exact.
  long num = 1;
  long den = 1;
  const long n = static_cast<long>(m.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) {
      num *= m[i] - m[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

long dimension_u3(const Weight& m) {
  if (m.size() != 3) throw Error(ErrorKind::InvalidArgument, "dimension_u3 needs three labels");
  require_dominant(m);
  const long a = m[0] - m[1];
  const long b = m[1] - m[2];
  return (1 + a) * (1 + b) * (2 + a + b) / 2;
}

long casimir2(const Weight& m) {
  const long n = static_cast<long>(m.size());
  long s = 0;
  for (long i = 1; i <= n; ++i) s += m[i - 1] * (m[i - 1] + n + 1 - 2 * i);
  return s;
}

CartanLabel to_cartan(const Weight& m) {
  if (m.size() != 3) throw Error(ErrorKind::InvalidArgument, "Cartan labels need a U(3) weight");
  return {m[0] + m[1] + m[2], m[0] - m[1], m[0] - m[2]};
}

Weight from_cartan(const CartanLabel& c) {
  const long s = c.n + c.a + c.b;
  if (s % 3 != 0)
    throw Error(ErrorKind::InvalidArgument, "n + a + b must be divisible by 3 for integer labels");
  const long m1 = s / 3;
  return {m1, m1 - c.a, m1 - c.b};
}

long casimir2_cartan(const CartanLabel& c) {
  const long num = c.n * c.n + 2 * (c.a * c.a + c.b * c.b - c.a * c.b + 3 * c.b);
  if (num % 3 != 0)
    throw Error(ErrorKind::InvalidArgument, "Cartan label does not come from an integer weight");
  return num / 3;
}

const char* to_string(Series s) {
  switch (s) {
    case Series::DPlus1: return "D+1";
    case Series::DPlus2: return "D+2";
    case Series::DMinus1: return "D-1";
    case Series::DMinus2: return "D-2";
    case Series::D03: return "D0_3";
    case Series::D02: return "D0_2";
    case Series::D01: return "D0_1";
    case Series::D00: return "D0_0";
  }
  return "?";
}

namespace {

// Variables: 0..2 are m_{1,3}..m_{3,3}, 3..6 are kappa_1..kappa_4.
enum Var { M1, M2, M3, K1, K2, K3, K4 };
struct Expr {
  Var var;
  long offset;
};
enum class Rel { Ge, Gt };
// A chain e0 r0 e1 r1 e2 ...; a series is a conjunction of chains.
struct Chain {
  std::vector<Expr> exprs;
  std::vector<Rel> rels;
};

const std::vector<Chain>& chains(Series s) {
  using R = Rel;
  static const std::vector<Chain> table[] = {
      // m13 > k1 > k4-4 > k2 >= m23 >= k3 >= m33
      {{{{M1, 0}, {K1, 0}, {K4, -4}, {K2, 0}, {M2, 0}, {K3, 0}, {M3, 0}},
        {R::Gt, R::Gt, R::Gt, R::Ge, R::Ge, R::Ge}}},
      // m13 >= k2 >= m23 > k1+1 > k4-3 > k3 >= m33
      {{{{M1, 0}, {K2, 0}, {M2, 0}, {K1, 1}, {K4, -3}, {K3, 0}, {M3, 0}},
        {R::Ge, R::Ge, R::Gt, R::Gt, R::Gt, R::Ge}}},
      // m13 >= k2 > k1 > k4-4 > m23 >= k3 >= m33
      {{{{M1, 0}, {K2, 0}, {K1, 0}, {K4, -4}, {M2, 0}, {K3, 0}, {M3, 0}},
        {R::Ge, R::Gt, R::Gt, R::Gt, R::Ge, R::Ge}}},
      // m13 >= k2 >= m23 >= k3 > k1+1 > k4-3 > m33
      {{{{M1, 0}, {K2, 0}, {M2, 0}, {K3, 0}, {K1, 1}, {K4, -3}, {M3, 0}},
        {R::Ge, R::Ge, R::Ge, R::Gt, R::Gt, R::Gt}}},
      // m13 >= 1+k1 >= m23 >= 1+k2 >= m33 >= 1+k3
      {{{{M1, 0}, {K1, 1}, {M2, 0}, {K2, 1}, {M3, 0}, {K3, 1}},
        {R::Ge, R::Ge, R::Ge, R::Ge, R::Ge}}},
      // m13 >= 1+k1 >= m23 >= 1+k2 ; k4-1 >= m33
      {{{{M1, 0}, {K1, 1}, {M2, 0}, {K2, 1}}, {R::Ge, R::Ge, R::Ge}},
       {{{K4, -1}, {M3, 0}}, {R::Ge}}},
      // m13 >= 1+k1 ; k3-1 >= m23 >= k4-1 >= m33
      {{{{M1, 0}, {K1, 1}}, {R::Ge}},
       {{{K3, -1}, {M2, 0}, {K4, -1}, {M3, 0}}, {R::Ge, R::Ge, R::Ge}}},
      // k2-1 >= m13 >= k3-1 >= m23 >= k4-1 >= m33
      {{{{K2, -1}, {M1, 0}, {K3, -1}, {M2, 0}, {K4, -1}, {M3, 0}},
        {R::Ge, R::Ge, R::Ge, R::Ge, R::Ge}}},
  };
  return table[static_cast<int>(s)];
}

}  // namespace

bool in_series(Series s, const Kappa& kappa, const U3Weight& m) {
  const long vars[7] = {m[0], m[1], m[2], kappa[0], kappa[1], kappa[2], kappa[3]};
  auto value = [&](const Expr& e) { return vars[e.var] + e.offset; };
  for (const Chain& c : chains(s))
    for (std::size_t i = 0; i < c.rels.size(); ++i) {
      const long l = value(c.exprs[i]);
      const long r = value(c.exprs[i + 1]);
      if (c.rels[i] == Rel::Ge ? !(l >= r) : !(l > r)) return false;
    }
  return true;
}

std::vector<Series> series_membership(const Kappa& kappa, const U3Weight& m) {
  std::vector<Series> out;
  for (Series s : kAllSeries)
    if (in_series(s, kappa, m)) out.push_back(s);
  return out;
}

std::vector<LadderTerm> ladder_decomposition(const Kappa& kappa, long rungs) {
  if (rungs < 0) throw Error(ErrorKind::InvalidArgument, "rung count must be non-negative");
  // Rung i contributes sigma_{n0 + i, a0 + i, b0 + i} for each listed summand.
  struct Summand {
    long n0, a0, b0;
  };
  std::vector<Summand> summands;
  if (kappa == Kappa{0, 0, 0, 0}) summands = {{3, 0, 0}};
  else if (kappa == Kappa{1, 0, 0, 0}) summands = {{4, 1, 1}, {5, 0, 1}};
  else if (kappa == Kappa{1, 1, 0, 0}) summands = {{6, 0, 0}, {5, 0, 1}};
  else if (kappa == Kappa{1, 1, 1, 0}) summands = {{6, 0, 0}};
  else if (kappa == Kappa{2, 0, 0, 0}) summands = {{5, 2, 2}, {6, 1, 2}, {7, 0, 2}};
  else
    throw Error(ErrorKind::InvalidArgument,
                "ladder decomposition is tabulated only for kappa in {(0,0,0,0), (1,0,0,0), "
                "(1,1,0,0), (1,1,1,0), (2,0,0,0)}");
  std::vector<LadderTerm> out;
  for (long i = 0; i < rungs; ++i)
    for (const Summand& s : summands) out.push_back({i, {s.n0 + i, s.a0 + i, s.b0 + i}});
  return out;
}

}  // namespace canon
