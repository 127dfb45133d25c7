#include "armatri/model.hpp"

#include "armatri/errors.hpp"

namespace armatri {

ArmaModel::ArmaModel(std::vector<Rational> ar, std::vector<Rational> ma, Rational sigma2)
    : ar_(std::move(ar)), ma_(std::move(ma)), sigma2_(std::move(sigma2)) {
  if (!ar_.empty() && ar_.back().is_zero())
    throw ValidationError("trailing AR coefficient is zero; the AR order would be ambiguous");
  if (!ma_.empty() && ma_.back().is_zero())
    throw ValidationError("trailing MA coefficient is zero; the MA order would be ambiguous");
  if (sigma2_.sign() <= 0) throw ValidationError("innovation variance must be positive");
}

ArmaModel ArmaModel::with_sigma(std::vector<Rational> ar, std::vector<Rational> ma, const Rational& sigma) {
  if (sigma.sign() <= 0) throw ValidationError("sigma must be positive");
  return {std::move(ar), std::move(ma), sigma * sigma};
}

Poly char_poly(std::span<const Rational> ar) {
  const std::size_t p = ar.size();
  std::vector<GaussianRational> c(p + 1);
  c[p] = 1;
  for (std::size_t j = 1; j <= p; ++j) c[p - j] = -ar[j - 1];
  return Poly(std::move(c));
}

Poly char_poly(const ArmaModel& m) { return char_poly(m.ar()); }

Poly ma_poly(std::span<const Rational> ma) {
  const std::size_t q = ma.size();
  std::vector<GaussianRational> c(q + 1);
  c[q] = 1;
  for (std::size_t j = 1; j <= q; ++j) c[q - j] = ma[j - 1];
  return Poly(std::move(c));
}

Poly ma_poly(const ArmaModel& m) { return ma_poly(m.ma()); }

ValidationReport validate(const ArmaModel& m) {
  ValidationReport r;
  const Poly phi = char_poly(m);
  const Poly theta = ma_poly(m);
  if (m.p() > 0) r.ar_roots = roots_exact(phi);
  r.stationary = true;
  for (const auto& root : r.ar_roots)
    if (root.root.norm() >= Rational(1)) r.stationary = false;
  if (m.q() > 0) {
    try {
      r.ma_roots = roots_exact(theta);
    } catch (const RootsNotExpressible&) {
      r.ma_roots.reset();
    }
  } else {
    r.ma_roots.emplace();
  }
  r.coprime = gcd(phi, theta).degree() == 0;
  return r;
}

ValidationReport require_valid(const ArmaModel& m) {
  ValidationReport r = validate(m);
  if (!r.stationary)
    throw NotStationary("model is not stationary: every root of the AR characteristic polynomial must be smaller "
                        "than 1 in absolute value");
  if (!r.coprime)
    throw ValidationError("the AR and MA characteristic polynomials share a root");
  return r;
}

}  // namespace armatri
