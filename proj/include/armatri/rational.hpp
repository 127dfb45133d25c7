#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace armatri {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "n", "n/d", decimals ("-0.25") and exponent forms ("1e-3").
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& raw() const { return v_; }
  [[nodiscard]] mpz_class num() const { return v_.get_num(); }
  [[nodiscard]] mpz_class den() const { return v_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
  [[nodiscard]] double to_double() const { return v_.get_d(); }
  [[nodiscard]] long double to_long_double() const;

  /// "num/den", or "num" when the denominator is 1.
  [[nodiscard]] std::string str() const;
  /// Decimal rendering with `significant` significant digits.
  [[nodiscard]] std::string decimal(int significant = 12) const;

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational pow(long e) const;
  /// Exact square root, if this is the square of a rational.
  [[nodiscard]] std::optional<Rational> sqrt() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<mpz_class> isqrt_exact(const mpz_class& n);

}  // namespace armatri
