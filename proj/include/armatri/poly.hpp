#pragma once

#include "armatri/gaussian.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace armatri {

/// Univariate polynomial over Q(i), coefficients stored constant term first.
/// Trailing zero coefficients are always trimmed; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussianRational> coeffs);
  Poly(std::initializer_list<GaussianRational> coeffs);

  static Poly constant(const GaussianRational& c);
  /// The monomial c*x^n.
  static Poly monomial(const GaussianRational& c, int n);
  /// x - root.
  static Poly linear(const GaussianRational& root);
  static Poly from_rationals(std::span<const Rational> coeffs);

  [[nodiscard]] const std::vector<GaussianRational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] bool is_real() const;
  /// Coefficient of x^i, zero past the degree.
  [[nodiscard]] GaussianRational coeff(int i) const;
  [[nodiscard]] const GaussianRational& leading() const;

  [[nodiscard]] GaussianRational eval(const GaussianRational& x) const;
  [[nodiscard]] std::complex<long double> eval(std::complex<long double> x) const;
  [[nodiscard]] long double eval_real(long double x) const;

  [[nodiscard]] Poly derivative() const;
  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly conj() const;
  /// p(s*x).
  [[nodiscard]] Poly scale_arg(const GaussianRational& s) const;
  /// p(x + s), Taylor shift.
  [[nodiscard]] Poly shift(const GaussianRational& s) const;
  /// x^n * p(1/x) for n >= degree().
  [[nodiscard]] Poly reversed(int n) const;
  [[nodiscard]] Poly pow(int e) const;
  /// Real parts of all coefficients, as rationals (requires is_real()).
  [[nodiscard]] std::vector<Rational> real_coeffs() const;

  /// Long division; throws std::domain_error on a zero divisor.
  [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Exact division; throws std::logic_error when the remainder is nonzero.
  [[nodiscard]] Poly exact_div(const Poly& divisor) const;

  [[nodiscard]] std::string str(const std::string& var = "x") const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussianRational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
  friend Poly operator*(const GaussianRational& s, Poly a) { return a *= s; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Monic greatest common divisor (zero only if both inputs are zero).
Poly gcd(Poly a, Poly b);

/// Monic polynomial with exactly the given roots, repeated as listed.
Poly poly_from_roots(std::span<const GaussianRational> roots);

}  // namespace armatri
