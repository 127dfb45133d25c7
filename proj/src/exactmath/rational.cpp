#include "armatri/rational.hpp"

#include "armatri/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <vector>

namespace armatri {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("invalid rational literal: '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string_view whole = text;
  if (text.empty()) throw ParseError("empty rational literal");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class n = parse_integer(text.substr(0, slash), whole);
    const mpz_class d = parse_integer(text.substr(slash + 1), whole);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return Rational(n, d);
  }

  // Decimal with optional exponent.
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class ez = parse_integer(text.substr(e + 1), whole);
    if (!ez.fits_slong_p() || ::abs(ez) > 10000) throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    exponent = ez.get_si();
    text = text.substr(0, e);
  }
  bool neg = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto ip = text.substr(0, dot);
    const auto fp = text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw ParseError("invalid rational literal: '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(text)) throw ParseError("invalid rational literal: '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  mpz_class n(digits, 10);
  if (neg) n = -n;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(n, scale) : Rational(mpz_class(n * scale), mpz_class(1));
}

long double Rational::to_long_double() const {
  // Split to keep more than double precision for large numerators/denominators.
  const mpz_class& n = v_.get_num();
  const mpz_class& d = v_.get_den();
  if (n.fits_slong_p() && d.fits_slong_p())
    return static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
  return static_cast<long double>(v_.get_d());
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int significant) const {
  significant = std::clamp(significant, 1, 200);
  if (is_zero()) return "0";
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(significant) * 4 + 64;
  mpf_class f(v_, bits);
  std::vector<char> buf(static_cast<std::size_t>(significant) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant, f.get_mpf_t());
  return std::string(buf.data());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::optional<mpz_class> isqrt_exact(const mpz_class& n) {
  if (n < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> Rational::sqrt() const {
  auto n = isqrt_exact(num());
  if (!n) return std::nullopt;
  auto d = isqrt_exact(den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational operator-(const Rational& a) {
  Rational r = a;
  r.v_ = -r.v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace armatri
