#include "armatri/gaussian.hpp"

#include <stdexcept>

namespace armatri {

GaussianRational GaussianRational::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("inverse of zero");
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag = (im_ == Rational(1)) ? "i" : (im_ == Rational(-1) ? "-i" : im_.str() + "*i");
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) imag = "+" + imag;
  return re_.str() + imag;
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
  if (im_.is_zero() && o.im_.is_zero()) {
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
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

bool canonical_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

std::optional<GaussianRational> sqrt_exact(const GaussianRational& z) {
  const Rational& a = z.re();
  const Rational& b = z.im();
  if (b.is_zero()) {
    if (a.sign() >= 0) {
      auto r = a.sqrt();
      if (!r) return std::nullopt;
      return GaussianRational(*r);
    }
    auto r = (-a).sqrt();
    if (!r) return std::nullopt;
    return GaussianRational(0, *r);
  }
  // (x + yi)^2 = a + bi  =>  x^2 = (|z| + a)/2, y = b/(2x), with x > 0.
  auto modulus = z.norm().sqrt();
  if (!modulus) return std::nullopt;
  auto x = ((*modulus + a) / Rational(2)).sqrt();
  if (!x || x->is_zero()) return std::nullopt;
  return GaussianRational(*x, b / (Rational(2) * *x));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace armatri
