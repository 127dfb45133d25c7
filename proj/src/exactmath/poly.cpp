#include "armatri/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace armatri {

Poly::Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const GaussianRational& c) { return Poly(std::vector<GaussianRational>{c}); }

Poly Poly::monomial(const GaussianRational& c, int n) {
  if (n < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<GaussianRational> v(static_cast<std::size_t>(n) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const GaussianRational& root) { return Poly{-root, GaussianRational(1)}; }

Poly Poly::from_rationals(std::span<const Rational> coeffs) {
  return Poly(std::vector<GaussianRational>(coeffs.begin(), coeffs.end()));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

GaussianRational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return c_[static_cast<std::size_t>(i)];
}

const GaussianRational& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

GaussianRational Poly::eval(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<long double> Poly::eval(std::complex<long double> x) const {
  std::complex<long double> acc{0, 0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex_ld();
  return acc;
}

long double Poly::eval_real(long double x) const {
  long double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->re().to_long_double();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GaussianRational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * GaussianRational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const GaussianRational inv = leading().inverse();
  Poly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

Poly Poly::conj() const {
  std::vector<GaussianRational> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.conj());
  return Poly(std::move(v));
}

Poly Poly::scale_arg(const GaussianRational& s) const {
  std::vector<GaussianRational> v = c_;
  GaussianRational f(1);
  for (auto& c : v) {
    c *= f;
    f *= s;
  }
  return Poly(std::move(v));
}

Poly Poly::shift(const GaussianRational& s) const {
  // Horner in the shifted variable: ((a_n)(x+s) + a_{n-1})(x+s) + ...
  Poly result;
  const Poly lin{s, GaussianRational(1)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    result *= lin;
    result += Poly::constant(*it);
  }
  return result;
}

Poly Poly::reversed(int n) const {
  if (n < degree()) throw std::invalid_argument("reversal length below degree");
  std::vector<GaussianRational> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(n - i)] = c_[static_cast<std::size_t>(i)];
  return Poly(std::move(v));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly r = Poly::constant(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

std::vector<Rational> Poly::real_coeffs() const {
  std::vector<Rational> out;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    if (!c.is_real()) throw std::domain_error("polynomial has non-real coefficients");
    out.push_back(c.re());
  }
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly{}, *this};
  std::vector<GaussianRational> rem = c_;
  const int dd = divisor.degree();
  std::vector<GaussianRational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const GaussianRational inv_lead = divisor.leading().inverse();
  for (int i = degree(); i >= dd; --i) {
    const GaussianRational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const GaussianRational f = top * inv_lead;
    quot[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::exact_div(const Poly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
  return q;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const GaussianRational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.is_real() ? c.re().str() : "(" + c.str() + ")";
    bool neg = c.is_real() && c.re().sign() < 0;
    if (neg) cs = (-c.re()).str();
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    const bool unit = c.is_real() && c.re().abs() == Rational(1);
    if (i == 0) os << cs;
    else {
      if (!unit) os << cs << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = r.is_zero() ? Poly{} : r.monic();
  }
  return a.monic();
}

Poly poly_from_roots(std::span<const GaussianRational> roots) {
  Poly r = Poly::constant(1);
  for (const auto& z : roots) r *= Poly::linear(z);
  return r;
}

}  // namespace armatri
