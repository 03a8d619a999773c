#pragma once

// Reference implementations used only by tests, written without library helpers.

#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

#include "canon/gelfand_ladders.hpp"
#include "canon/kinematics.hpp"

namespace oracle {

using canon::Series;

// Each discrete series written out as one boolean expression.
inline bool series(Series s, long k1, long k2, long k3, long k4, long m1, long m2, long m3) {
  switch (s) {
    case Series::DPlus1: return m1 > k1 && k1 > k4 - 4 && k4 - 4 > k2 && k2 >= m2 && m2 >= k3 && k3 >= m3;
    case Series::DPlus2: return m1 >= k2 && k2 >= m2 && m2 > k1 + 1 && k1 + 1 > k4 - 3 && k4 - 3 > k3 && k3 >= m3;
    case Series::DMinus1: return m1 >= k2 && k2 > k1 && k1 > k4 - 4 && k4 - 4 > m2 && m2 >= k3 && k3 >= m3;
    case Series::DMinus2: return m1 >= k2 && k2 >= m2 && m2 >= k3 && k3 > k1 + 1 && k1 + 1 > k4 - 3 && k4 - 3 > m3;
    case Series::D03: return m1 >= 1 + k1 && 1 + k1 >= m2 && m2 >= 1 + k2 && 1 + k2 >= m3 && m3 >= 1 + k3;
    case Series::D02: return m1 >= 1 + k1 && 1 + k1 >= m2 && m2 >= 1 + k2 && k4 - 1 >= m3;
    case Series::D01: return m1 >= 1 + k1 && k3 - 1 >= m2 && m2 >= k4 - 1 && k4 - 1 >= m3;
    case Series::D00: return k2 - 1 >= m1 && m1 >= k3 - 1 && k3 - 1 >= m2 && m2 >= k4 - 1 && k4 - 1 >= m3;
  }
  return false;
}

using Rung = std::tuple<long, long, long>;

// The printed ladders, rung i spelled out per label.
inline std::vector<Rung> printed_ladder(const canon::Kappa& k, long rungs) {
  std::vector<Rung> out;
  for (long i = 0; i < rungs; ++i) {
    if (k == canon::Kappa{0, 0, 0, 0}) {
      out.push_back({i + 3, i, i});
    } else if (k == canon::Kappa{1, 0, 0, 0}) {
      out.push_back({i + 4, i + 1, i + 1});
      out.push_back({i + 5, i, i + 1});
    } else if (k == canon::Kappa{1, 1, 0, 0}) {
      out.push_back({i + 6, i, i});
      out.push_back({i + 5, i, i + 1});
    } else if (k == canon::Kappa{1, 1, 1, 0}) {
      out.push_back({i + 6, i, i});
    } else if (k == canon::Kappa{2, 0, 0, 0}) {
      out.push_back({i + 5, i + 2, i + 2});
      out.push_back({i + 6, i + 1, i + 2});
      out.push_back({i + 7, i, i + 2});
    }
  }
  return out;
}

// Quadratic Casimir in (n, a, b) labels.
inline long casimir2_nab(long n, long a, long b) { return (n * n + 2 * (a * a + b * b - a * b + 3 * b)) / 3; }

// Taylor series with scaling and squaring.
inline canon::PhaseMatrix expm(const canon::PhaseMatrix& g) {
  int s = 0;
  while (g.norm() / std::pow(2.0, s) > 0.1) ++s;
  const canon::PhaseMatrix a = g / std::pow(2.0, s);
  canon::PhaseMatrix term = canon::PhaseMatrix::Identity(), sum = canon::PhaseMatrix::Identity();
  for (int k = 1; k < 25; ++k) {
    term = term * a / double(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

// Normalized Hermite functions from the explicit polynomials, k <= 4.
inline double hermite(int k, double x) {
  static const double fact[] = {1, 1, 2, 6, 24};
  double h = 0;
  switch (k) {
    case 0: h = 1; break;
    case 1: h = 2 * x; break;
    case 2: h = 4 * x * x - 2; break;
    case 3: h = 8 * x * x * x - 12 * x; break;
    case 4: h = 16 * std::pow(x, 4) - 48 * x * x + 12; break;
    default: return std::nan("");
  }
  return h * std::exp(-x * x / 2) / std::sqrt(std::pow(2.0, k) * fact[k] * std::sqrt(std::numbers::pi));
}

}  // namespace oracle
