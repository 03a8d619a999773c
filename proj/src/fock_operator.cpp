#include "canon/fock_operator.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "canon/error.hpp"

namespace canon {

FockBasis::FockBasis(int cap) : cap_(cap) {
  const int side = cap + 1;
  lookup_.assign(side * side * side * side, -1);
  for (int d = 0; d <= cap; ++d) {
    for (int m0 = d; m0 >= 0; --m0)
      for (int m1 = d - m0; m1 >= 0; --m1)
        for (int m2 = d - m0 - m1; m2 >= 0; --m2) {
          const MultiIndex m{m0, m1, m2, d - m0 - m1 - m2};
          lookup_[((m[0] * side + m[1]) * side + m[2]) * side + m[3]] =
              static_cast<int>(index_.size());
          index_.push_back(m);
        }
    degree_end_.push_back(static_cast<int>(index_.size()));
  }
}

const FockBasis& FockBasis::get(int degree_cap) {
  if (degree_cap < 0 || degree_cap > 40)
    throw Error(ErrorKind::InvalidArgument, "degree cap out of range [0, 40]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FockBasis>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[degree_cap];
  if (!slot) slot.reset(new FockBasis(degree_cap));
  return *slot;
}

int FockBasis::find(const MultiIndex& m) const {
  for (int v : m)
    if (v < 0 || v > cap_) return -1;
  if (total_degree(m) > cap_) return -1;
  const int side = cap_ + 1;
  return lookup_[((m[0] * side + m[1]) * side + m[2]) * side + m[3]];
}

int FockBasis::count_up_to(int d) const {
  if (d < 0) return 0;
  return degree_end_[std::min(d, cap_)];
}

FockOperator::FockOperator(int degree_cap)
    : cap_(degree_cap), cols_(FockBasis::get(degree_cap).size()) {}

FockOperator FockOperator::identity(int degree_cap, const QComplex& scale) {
  FockOperator op(degree_cap);
  if (!scale.is_zero())
    for (int j = 0; j < op.dim(); ++j) op.cols_[j].emplace_back(j, scale);
  return op;
}

std::size_t FockOperator::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void FockOperator::add(int row, int col, const QComplex& v) {
  if (v.is_zero()) return;
  Column& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  } else {
    c.insert(it, {row, v});
  }
}

QComplex FockOperator::entry(int row, int col) const {
  const Column& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return {};
}

namespace {

void check_same_space(const FockOperator& a, const FockOperator& b) {
  if (a.degree_cap() != b.degree_cap())
    throw Error(ErrorKind::InvalidArgument, "operators act on different truncations");
}

FockOperator::Column merge(const FockOperator::Column& a, const FockOperator::Column& b,
                           bool subtract) {
  FockOperator::Column out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, subtract ? -j->second : j->second);
      ++j;
    } else {
      QComplex v = subtract ? i->second - j->second : i->second + j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FockOperator& FockOperator::operator+=(const FockOperator& o) {
  check_same_space(*this, o);
  for (int j = 0; j < dim(); ++j) cols_[j] = merge(cols_[j], o.cols_[j], false);
  return *this;
}

FockOperator& FockOperator::operator-=(const FockOperator& o) {
  check_same_space(*this, o);
  for (int j = 0; j < dim(); ++j) cols_[j] = merge(cols_[j], o.cols_[j], true);
  return *this;
}

FockOperator& FockOperator::operator*=(const QComplex& s) {
  if (s.is_zero()) {
    for (auto& c : cols_) c.clear();
    return *this;
  }
  for (auto& c : cols_)
    for (auto& e : c) e.second *= s;
  return *this;
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  check_same_space(a, b);
  FockOperator out(a.cap_);
  std::map<int, QComplex> acc;
  for (int j = 0; j < b.dim(); ++j) {
    acc.clear();
    for (const auto& [k, bk] : b.cols_[j])
      for (const auto& [i, aik] : a.cols_[k]) acc[i] += aik * bk;
    auto& col = out.cols_[j];
    for (auto& [i, v] : acc)
      if (!v.is_zero()) col.emplace_back(i, std::move(v));
  }
  return out;
}

bool operator==(const FockOperator& a, const FockOperator& b) {
  return a.cap_ == b.cap_ && a.cols_ == b.cols_;
}

bool FockOperator::equal_on(const FockOperator& o, int max_degree) const {
  check_same_space(*this, o);
  const int n = FockBasis::get(cap_).count_up_to(max_degree);
  for (int j = 0; j < n; ++j)
    if (cols_[j] != o.cols_[j]) return false;
  return true;
}

bool FockOperator::zero_on(int max_degree) const {
  const int n = FockBasis::get(cap_).count_up_to(max_degree);
  for (int j = 0; j < n; ++j)
    if (!cols_[j].empty()) return false;
  return true;
}

FockOperator FockOperator::restricted(int max_degree) const {
  FockOperator out(cap_);
  const int n = FockBasis::get(cap_).count_up_to(max_degree);
  for (int j = 0; j < n; ++j) out.cols_[j] = cols_[j];
  return out;
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  return a * b - b * a;
}

}  // namespace canon
