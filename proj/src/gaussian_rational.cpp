#include "hurwitz_sos/gaussian_rational.hpp"

#include "hurwitz_sos/error.hpp"

namespace hsos {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational den = o.norm();
  if (sgn(den) == 0) throw InvalidInput("division by zero Gaussian rational");
  // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
  Rational r = (re_ * o.re_ + im_ * o.im_) / den;
  Rational i = (im_ * o.re_ - re_ * o.im_) / den;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string s = re_.get_str();
  s += sgn(im_) < 0 ? "-" : "+";
  s += Rational(abs(im_)).get_str() + "i";
  return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

}  // namespace hsos
