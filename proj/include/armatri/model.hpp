#pragma once

#include "armatri/poly.hpp"
#include "armatri/roots.hpp"

#include <optional>
#include <span>
#include <vector>

namespace armatri {

/// Coefficient form of an ARMA(p,q) model:
///   X_n = a_1 X_{n-1} + ... + a_p X_{n-p} + e_n + g_1 e_{n-1} + ... + g_q e_{n-q}
/// with independent e_n ~ N(0, sigma).
///
/// Orders come from the list lengths; a trailing zero coefficient is rejected
/// so p and q are unambiguous. The innovation variance sigma^2 is stored rather
/// than sigma itself, since models recovered from a density carry a rational
/// sigma^2 whose square root need not be rational.
class ArmaModel {
 public:
  ArmaModel(std::vector<Rational> ar, std::vector<Rational> ma, Rational sigma2);
  static ArmaModel with_sigma(std::vector<Rational> ar, std::vector<Rational> ma, const Rational& sigma);

  [[nodiscard]] const std::vector<Rational>& ar() const { return ar_; }
  [[nodiscard]] const std::vector<Rational>& ma() const { return ma_; }
  [[nodiscard]] const Rational& sigma2() const { return sigma2_; }
  /// sigma, when sigma^2 is the square of a rational.
  [[nodiscard]] std::optional<Rational> sigma() const { return sigma2_.sqrt(); }
  [[nodiscard]] int p() const { return static_cast<int>(ar_.size()); }
  [[nodiscard]] int q() const { return static_cast<int>(ma_.size()); }

  friend bool operator==(const ArmaModel&, const ArmaModel&) = default;

 private:
  std::vector<Rational> ar_;
  std::vector<Rational> ma_;
  Rational sigma2_;
};

/// lambda^p - a_1 lambda^{p-1} - ... - a_p.
Poly char_poly(std::span<const Rational> ar);
Poly char_poly(const ArmaModel& m);
/// lambda^q + g_1 lambda^{q-1} + ... + g_q.
Poly ma_poly(std::span<const Rational> ma);
Poly ma_poly(const ArmaModel& m);

struct ValidationReport {
  bool stationary = false;
  bool coprime = false;
  std::vector<RootMultiplicity> ar_roots;
  /// Empty when some MA root lies outside Q(i); coprimality is still decided exactly by a gcd.
  std::optional<std::vector<RootMultiplicity>> ma_roots;

  [[nodiscard]] bool ok() const { return stationary && coprime; }
};

/// Stationarity (every AR root strictly inside the unit circle, compared exactly)
/// and coprimality of the AR and MA characteristic polynomials.
/// Throws RootsNotExpressible when an AR root is outside Q(i).
ValidationReport validate(const ArmaModel& m);

/// Throws NotStationary (or ValidationError for shared roots) unless validate(m).ok().
ValidationReport require_valid(const ArmaModel& m);

}  // namespace armatri
