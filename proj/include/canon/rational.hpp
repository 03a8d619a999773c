#pragma once

// Exact complex rationals over GMP.

#include <complex>
#include <string>

#include <gmpxx.h>

namespace canon {

struct QComplex {
  mpq_class re{0};
  mpq_class im{0};

  QComplex() = default;
  QComplex(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  QComplex(long r) : re(r), im(0) {}

  static QComplex i() { return {0, 1}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  QComplex conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
  std::string str() const;

  QComplex& operator+=(const QComplex& o) { re += o.re; im += o.im; return *this; }
  QComplex& operator-=(const QComplex& o) { re -= o.re; im -= o.im; return *this; }
  QComplex& operator*=(const QComplex& o);

  friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
  friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
  friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
  friend QComplex operator-(const QComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const QComplex& a, const QComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace canon
