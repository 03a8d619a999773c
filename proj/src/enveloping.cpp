#include "canon/enveloping.hpp"

#include <algorithm>

#include "canon/error.hpp"

namespace canon {

UElement UElement::scalar(const QComplex& c) {
  UElement u;
  u.add("", c);
  return u;
}

UElement UElement::generator(int k) {
  UElement u;
  u.add(std::string(1, static_cast<char>(k)), QComplex(1));
  return u;
}

UElement UElement::from_vector(const ExactVector& v) {
  UElement u;
  for (int k = 0; k < kAlgebraDim; ++k) u.add(std::string(1, static_cast<char>(k)), v[k]);
  return u;
}

int UElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

void UElement::add(const std::string& monomial, const QComplex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

UElement& UElement::operator*=(const QComplex& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

// m x with m ordered: m' m_k x = (m' x) m_k + m' [m_k, x] when x < m_k.
const UElement& EnvelopingAlgebra::times_generator(const std::string& monomial, int x) {
  std::string key = monomial;
  key.push_back(static_cast<char>(x));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  UElement out;
  if (monomial.empty() || static_cast<int>(monomial.back()) <= x) {
    out.add(key, QComplex(1));
  } else {
    const std::string head = monomial.substr(0, monomial.size() - 1);
    const int last = monomial.back();
    const UElement left = times_generator(head, x);
    for (const auto& [m, c] : left.terms()) {
      UElement part = times_generator(m, last);
      out += part * c;
    }
    for (const auto& [k, coeff] : structure(last, x)) {
      UElement part = times_generator(head, k);
      out += part * QComplex(coeff);
    }
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

UElement EnvelopingAlgebra::multiply(const UElement& a, const UElement& b) {
  UElement out;
  for (const auto& [mb, cb] : b.terms()) {
    UElement partial = a;
    for (char x : mb) {
      UElement next;
      for (const auto& [m, c] : partial.terms()) {
        UElement part = times_generator(m, x);
        next += part * c;
      }
      partial = std::move(next);
    }
    out += partial * cb;
  }
  return out;
}

UElement EnvelopingAlgebra::commutator(const UElement& a, const UElement& b) {
  return multiply(a, b) - multiply(b, a);
}

UElement EnvelopingAlgebra::casimir(int order) {
  const UElement id = UElement::generator(kCentralIndex);
  if (order == 1) return id;
  if (order < 2 || order % 2 != 0) throw Error(ErrorKind::InvalidArgument, "Casimir order must be 1 or even");
  std::array<std::array<UElement, 4>, 4> v;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      UElement w = multiply(UElement::generator(raise_index(b)), UElement::generator(lower_index(a))) -
                   multiply(id, UElement::generator(z_index(a, b)));
      v[a][b] = b == 0 ? w * QComplex(-1) : w;
    }
  auto power = v;
  for (int step = 1; step < order / 2; ++step) {
    std::array<std::array<UElement, 4>, 4> next;
    for (int a = 0; a < 4; ++a)
      for (int c = 0; c < 4; ++c)
        for (int b = 0; b < 4; ++b) next[a][c] += multiply(power[a][b], v[b][c]);
    power = std::move(next);
  }
  UElement trace;
  for (int a = 0; a < 4; ++a) trace += power[a][a];
  return trace;
}

UElement EnvelopingAlgebra::casimir2_dimensioned() {
  // sqrt(2) T = A+0 + A-0 and sqrt(2) i E = A+0 - A-0, likewise Q and P, so
  // T^2 + E^2 = ((A+ + A-)^2 - (A+ - A-)^2) / 2.
  UElement quad;
  for (int a = 0; a < 4; ++a) {
    const UElement ap = UElement::generator(raise_index(a));
    const UElement am = UElement::generator(lower_index(a));
    const UElement s = ap + am, d = ap - am;
    const UElement pair = (multiply(s, s) - multiply(d, d)) * QComplex(mpq_class(1, 2));
    if (a == 0) quad += pair;
    else quad -= pair;
  }
  const UElement id = UElement::generator(kCentralIndex);
  const UElement y_minus_2 = UElement::from_vector(y_generator()) - UElement::scalar(QComplex(2));
  return (quad + multiply(id, y_minus_2) * QComplex(2)) * QComplex(mpq_class(-1, 2));
}

}  // namespace canon
