#include "canon/rational.hpp"

namespace canon {

QComplex& QComplex::operator*=(const QComplex& o) {
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string QComplex::str() const {
  if (sgn(im) == 0) return re.get_str();
  return "(" + re.get_str() + (sgn(im) < 0 ? "" : "+") + im.get_str() + "i)";
}

}  // namespace canon
