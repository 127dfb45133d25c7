#pragma once

#include "armatri/rational.hpp"

#include <complex>
#include <optional>
#include <ostream>
#include <string>

namespace armatri {

/// Exact complex number re + im*i with rational parts; the working field Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  GaussianRational(T v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {0, 1}; }

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
  [[nodiscard]] GaussianRational inverse() const;
  [[nodiscard]] GaussianRational pow(long e) const;
  [[nodiscard]] std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  [[nodiscard]] std::complex<long double> to_complex_ld() const {
    return {re_.to_long_double(), im_.to_long_double()};
  }

  /// "a", "b*i" or "a+b*i" with exact rationals.
  [[nodiscard]] std::string str() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

/// Total order used for deterministic output: real part first, then imaginary part.
bool canonical_less(const GaussianRational& a, const GaussianRational& b);

/// Square root in Q(i) with the branch re > 0, or re = 0 and im >= 0.
/// Empty when z is not a square in Q(i).
std::optional<GaussianRational> sqrt_exact(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace armatri
