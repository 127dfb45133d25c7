#pragma once

#include "armatri/poly.hpp"

namespace armatri {

/// num/den over Q(i), reduced: no common factor and a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly::constant(1)) {}
  RationalFunction(Poly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den);

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }

  [[nodiscard]] GaussianRational eval(const GaussianRational& x) const;
  [[nodiscard]] std::complex<long double> eval(std::complex<long double> x) const;
  /// f(1/x).
  [[nodiscard]] RationalFunction reciprocal_arg() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  void reduce();
  Poly num_;
  Poly den_;
};

}  // namespace armatri
