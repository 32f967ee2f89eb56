#include "eqeta/gaussian_rational.hpp"

#include "eqeta/errors.hpp"

namespace eqeta {

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n == 0) fail(ErrorKind::ZeroSeries, "inverse of zero Gaussian rational");
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(int exponent) const {
  GaussianRational base = exponent < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  GaussianRational result(1);
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_ == 0 && o.im_ == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (im_ == 0) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "*i";
  }
  if (re_ == 0) return im_part;
  return re_.get_str() + (im_ > 0 ? "+" : "") + im_part;
}

GaussianRational imaginary_pairing(const QVector& covector, const QVector& direction) {
  return {Rational(0), dot(covector, direction)};
}

}  // namespace eqeta
