#include "armatri/partial_fractions.hpp"

#include "armatri/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace armatri {

PartialFractionTerm PartialFractionTerm::power(GaussianRational c, int m) {
  PartialFractionTerm t;
  t.kind = Kind::Power;
  t.c = std::move(c);
  t.m = m;
  return t;
}

PartialFractionTerm PartialFractionTerm::pole(GaussianRational c, GaussianRational lambda, int ell) {
  if (lambda.is_zero()) throw std::invalid_argument("pole term at zero must be written as a power term");
  if (ell < 1) throw std::invalid_argument("pole order must be positive");
  PartialFractionTerm t;
  t.kind = Kind::Pole;
  t.c = std::move(c);
  t.lambda = std::move(lambda);
  t.ell = ell;
  return t;
}

GaussianRational PartialFractionTerm::eval(const GaussianRational& y) const {
  if (kind == Kind::Power) return c * y.pow(m);
  return c / (y - lambda).pow(ell);
}

std::complex<long double> PartialFractionTerm::eval(std::complex<long double> y) const {
  if (kind == Kind::Power) return c.to_complex_ld() * std::pow(y, m);
  return c.to_complex_ld() / std::pow(y - lambda.to_complex_ld(), ell);
}

RationalFunction PartialFractionTerm::as_function() const {
  if (kind == Kind::Power) {
    if (m >= 0) return RationalFunction(Poly::monomial(c, m));
    return {Poly::constant(c), Poly::monomial(1, -m)};
  }
  return {Poly::constant(c), Poly::linear(lambda).pow(ell)};
}

std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& f) {
  std::vector<PartialFractionTerm> powers;
  std::vector<PartialFractionTerm> poles;
  const Poly& num = f.num();
  const Poly& den = f.den();

  const Poly quotient = num.divmod(den).first;
  for (int i = 0; i <= quotient.degree(); ++i)
    if (!quotient.coeff(i).is_zero()) powers.push_back(PartialFractionTerm::power(quotient.coeff(i), i));

  if (den.degree() >= 1 && !num.is_zero()) {
    for (const auto& [lambda, mult] : roots_exact(den)) {
      // Laurent coefficients at lambda: num/den = g(y)/(y - lambda)^mult with g analytic there.
      const Poly rest = den.exact_div(Poly::linear(lambda).pow(mult));
      const Poly a = num.shift(lambda);
      const Poly b = rest.shift(lambda);
      const GaussianRational b0_inv = b.coeff(0).inverse();
      std::vector<GaussianRational> g(static_cast<std::size_t>(mult));
      for (int n = 0; n < mult; ++n) {
        GaussianRational acc = a.coeff(n);
        for (int j = 1; j <= n; ++j) acc -= b.coeff(j) * g[static_cast<std::size_t>(n - j)];
        g[static_cast<std::size_t>(n)] = acc * b0_inv;
      }
      for (int ell = 1; ell <= mult; ++ell) {
        const GaussianRational& c = g[static_cast<std::size_t>(mult - ell)];
        if (lambda.is_zero()) {
          if (!c.is_zero()) powers.push_back(PartialFractionTerm::power(c, -ell));
        } else {
          poles.push_back(PartialFractionTerm::pole(c, lambda, ell));
        }
      }
    }
  }
  std::stable_sort(powers.begin(), powers.end(),
                   [](const PartialFractionTerm& x, const PartialFractionTerm& y) { return x.m < y.m; });
  std::stable_sort(poles.begin(), poles.end(), [](const PartialFractionTerm& x, const PartialFractionTerm& y) {
    if (x.lambda != y.lambda) return canonical_less(x.lambda, y.lambda);
    return x.ell < y.ell;
  });
  powers.insert(powers.end(), poles.begin(), poles.end());
  return powers;
}

RationalFunction recombine(const std::vector<PartialFractionTerm>& terms) {
  RationalFunction sum;
  for (const auto& t : terms) sum += t.as_function();
  return sum;
}

}  // namespace armatri
