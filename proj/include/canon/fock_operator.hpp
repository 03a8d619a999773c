#pragma once

// Exact sparse operators on the truncated polynomial space spanned by the
// unnormalized monomials z^m = (z^0)^{m_0} ... (z^3)^{m_3}, |m| <= N.

#include <array>
#include <utility>
#include <vector>

#include "canon/rational.hpp"

namespace canon {

using MultiIndex = std::array<int, 4>;

inline int total_degree(const MultiIndex& m) { return m[0] + m[1] + m[2] + m[3]; }

/// Monomials with |m| <= N ordered by degree, then lexicographically.
class FockBasis {
 public:
  static const FockBasis& get(int degree_cap);

  int degree_cap() const noexcept { return cap_; }
  int size() const noexcept { return static_cast<int>(index_.size()); }
  const MultiIndex& multi_index(int i) const { return index_[i]; }
  /// -1 when any entry is negative or |m| > N.
  int find(const MultiIndex& m) const;
  /// Number of basis monomials with |m| <= d.
  int count_up_to(int d) const;

 private:
  explicit FockBasis(int cap);
  int cap_;
  std::vector<MultiIndex> index_;
  std::vector<int> lookup_;
  std::vector<int> degree_end_;
};

class FockOperator {
 public:
  using Column = std::vector<std::pair<int, QComplex>>;  // sorted by row

  FockOperator() = default;
  explicit FockOperator(int degree_cap);
  static FockOperator identity(int degree_cap, const QComplex& scale = QComplex(1));

  int degree_cap() const noexcept { return cap_; }
  int dim() const noexcept { return static_cast<int>(cols_.size()); }
  const Column& column(int j) const { return cols_[j]; }
  std::size_t nonzeros() const;

  /// Adds v to entry (row, col).
  void add(int row, int col, const QComplex& v);
  QComplex entry(int row, int col) const;

  FockOperator& operator+=(const FockOperator& o);
  FockOperator& operator-=(const FockOperator& o);
  FockOperator& operator*=(const QComplex& s);

  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  friend FockOperator operator*(FockOperator a, const QComplex& s) { return a *= s; }
  friend FockOperator operator*(const QComplex& s, FockOperator a) { return a *= s; }
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend bool operator==(const FockOperator& a, const FockOperator& b);

  /// True when every column whose monomial has degree <= max_degree agrees.
  bool equal_on(const FockOperator& o, int max_degree) const;
  bool zero_on(int max_degree) const;
  /// Column-wise (not entry-wise) restriction to degree <= max_degree inputs.
  FockOperator restricted(int max_degree) const;

 private:
  int cap_ = 0;
  std::vector<Column> cols_;
};

FockOperator commutator(const FockOperator& a, const FockOperator& b);

}  // namespace canon
