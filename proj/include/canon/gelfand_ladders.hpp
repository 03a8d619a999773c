#pragma once

// Gelfand-Tsetlin combinatorics for U(n), the integer discrete series of
// U(1,3) and the U(3) ladders of the D_0^3 series. Exact integer arithmetic.

#include <array>
#include <string>
#include <vector>

namespace canon {

using Weight = std::vector<long>;

/// Rows from the top (length n) down to length 1.
struct GelfandPattern {
  std::vector<Weight> rows;
  bool operator==(const GelfandPattern&) const = default;
};

bool is_dominant(const Weight& m);
/// Every pattern with the given top row; throws on a non-monotone weight.
std::vector<GelfandPattern> enumerate_patterns(const Weight& top);
/// Betweenness m_{k,j} >= m_{k,j-1} >= m_{k+1,j} on every adjacent pair of rows.
bool satisfies_betweenness(const GelfandPattern& p);

/// Weyl product formula prod_{i<j} (m_i - m_j + j - i) / (j - i).
long weyl_dimension(const Weight& m);
/// (1 + a')(1 + b')(2 + a' + b') / 2 with a' = m1 - m2, b' = m2 - m3.
long dimension_u3(const Weight& m);

/// sum_i m_i (m_i + n + 1 - 2 i), i = 1..n.
long casimir2(const Weight& m);

struct CartanLabel {
  long n = 0;
  long a = 0;
  long b = 0;
  bool operator==(const CartanLabel&) const = default;
};

CartanLabel to_cartan(const Weight& m);
/// Requires n + a + b divisible by 3.
Weight from_cartan(const CartanLabel& c);
/// (n^2 + 2 (a^2 + b^2 - a b + 3 b)) / 3.
long casimir2_cartan(const CartanLabel& c);

enum class Series { DPlus1, DPlus2, DMinus1, DMinus2, D03, D02, D01, D00 };
inline constexpr Series kAllSeries[] = {Series::DPlus1, Series::DPlus2, Series::DMinus1,
                                        Series::DMinus2, Series::D03,   Series::D02,
                                        Series::D01,    Series::D00};
const char* to_string(Series s);

using Kappa = std::array<long, 4>;
using U3Weight = std::array<long, 3>;

/// Every series whose inequality chain holds for (kappa, m).
std::vector<Series> series_membership(const Kappa& kappa, const U3Weight& m);
bool in_series(Series s, const Kappa& kappa, const U3Weight& m);

struct LadderTerm {
  long rung = 0;
  CartanLabel sigma;
  bool operator==(const LadderTerm&) const = default;
};

/// Rungs 0..rungs-1 of the U(3) ladder; only the five tabulated labels
/// (0,0,0,0), (1,0,0,0), (1,1,0,0), (1,1,1,0), (2,0,0,0) are supported.
std::vector<LadderTerm> ladder_decomposition(const Kappa& kappa, long rungs);

}  // namespace canon
