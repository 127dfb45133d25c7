#include "armatri/trig.hpp"

#include <stdexcept>

namespace armatri {

Poly chebyshev_t(int n) {
  if (n < 0) throw std::invalid_argument("negative Chebyshev index");
  Poly prev = Poly::constant(1);
  if (n == 0) return prev;
  Poly cur = Poly::monomial(1, 1);
  const Poly two_x = Poly::monomial(2, 1);
  for (int k = 1; k < n; ++k) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly cos_poly_to_y(const Poly& s) {
  const int d = s.degree();
  if (d < 0) return {};
  // (y + 1/y)/2 * y = (y^2 + 1)/2
  const Poly half_y2_plus_1{Rational(1, 2), 0, Rational(1, 2)};
  Poly out;
  Poly power = Poly::constant(1);
  for (int j = 0; j <= d; ++j) {
    out += s.coeff(j) * power * Poly::monomial(1, d - j);
    power *= half_y2_plus_1;
  }
  return out;
}

Poly symmetric_laurent_to_cos(const std::vector<GaussianRational>& half) {
  Poly out;
  for (std::size_t j = 0; j < half.size(); ++j) {
    if (half[j].is_zero()) continue;
    const GaussianRational w = j == 0 ? half[j] : GaussianRational(2) * half[j];
    out += w * chebyshev_t(static_cast<int>(j));
  }
  return out;
}

std::vector<GaussianRational> autocorrelation_half(std::span<const Rational> a) {
  std::vector<GaussianRational> r(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) {
    Rational acc;
    for (std::size_t j = 0; j + m < a.size(); ++j) acc += a[j] * a[j + m];
    r[m] = acc;
  }
  return r;
}

namespace {

struct SymmetricPart {
  Poly body;    // no root at zero, even degree, palindromic after sign fix
  int zeros = 0;
  int kappa = 1;
};

SymmetricPart split(const Poly& p) {
  SymmetricPart s;
  while (p.coeff(s.zeros).is_zero()) ++s.zeros;
  s.body = Poly(std::vector<GaussianRational>(p.coeffs().begin() + s.zeros, p.coeffs().end()));
  const Poly rev = s.body.reversed(s.body.degree());
  if (rev == s.body) s.kappa = 1;
  else if (rev == -s.body) s.kappa = -1;
  else s.kappa = 0;
  return s;
}

std::vector<GaussianRational> centre_half(const Poly& body) {
  const int n = body.degree() / 2;
  std::vector<GaussianRational> half(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) half[static_cast<std::size_t>(j)] = body.coeff(n + j);
  return half;
}

}  // namespace

std::pair<Poly, Poly> symmetric_to_cos(const RationalFunction& f) {
  if (f.is_zero()) return {Poly{}, Poly::constant(1)};
  SymmetricPart a = split(f.num());
  SymmetricPart b = split(f.den());
  if (a.kappa == 0 || b.kappa == 0 || a.kappa != b.kappa)
    throw std::invalid_argument("rational function is not invariant under y -> 1/y");
  if (a.kappa == -1) {
    const Poly y2m1{-1, 0, 1};
    a.body *= y2m1;
    b.body *= y2m1;
  }
  if (a.body.degree() % 2 != 0 || b.body.degree() % 2 != 0)
    throw std::invalid_argument("rational function is not invariant under y -> 1/y");
  const int shift = a.zeros - b.zeros + a.body.degree() / 2 - b.body.degree() / 2;
  if (shift != 0) throw std::invalid_argument("rational function is not invariant under y -> 1/y");
  return {symmetric_laurent_to_cos(centre_half(a.body)), symmetric_laurent_to_cos(centre_half(b.body))};
}

}  // namespace armatri
