#pragma once

#include "armatri/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace armatri {

/// One summand P(k) * theta^k of the general correlogram formula.
struct CorrelogramTerm {
  GaussianRational theta;
  Poly poly;  // in k, constant term first
  friend bool operator==(const CorrelogramTerm&, const CorrelogramTerm&) = default;
};

/// Closed-form autocorrelations of an ARMA model:
///   rho_k = sum_i P_i(k) theta_i^k   for k >= valid_from,
///   rho_k = specials[k]              for 0 <= k < valid_from,
/// plus the process variance V.
///
/// valid_from equals q - p + 1 and may be zero or negative. Terms are kept in
/// canonical order of theta; non-real terms come in conjugate pairs.
class Correlogram {
 public:
  /// Validates and canonicalises. A missing specials[0] is filled with 1.
  /// Throws ValidationError on any broken invariant.
  Correlogram(std::vector<CorrelogramTerm> terms, std::map<int, Rational> specials, int valid_from,
              Rational variance);

  [[nodiscard]] const std::vector<CorrelogramTerm>& terms() const { return terms_; }
  [[nodiscard]] const std::map<int, Rational>& specials() const { return specials_; }
  [[nodiscard]] int valid_from() const { return valid_from_; }
  [[nodiscard]] const Rational& variance() const { return variance_; }
  /// AR order implied by the terms: the expanded term count.
  [[nodiscard]] int p() const;
  /// MA order implied by valid_from.
  [[nodiscard]] int q() const { return p() + valid_from_ - 1; }

  /// The general formula at k, regardless of specials.
  [[nodiscard]] GaussianRational general(long k) const;

  friend bool operator==(const Correlogram&, const Correlogram&) = default;

 private:
  std::vector<CorrelogramTerm> terms_;
  std::map<int, Rational> specials_;
  int valid_from_ = 1;
  Rational variance_;
};

/// rho_k, exact; the imaginary part is always zero.
GaussianRational rho(const Correlogram& c, long k);

/// Real trigonometric rendering of a conjugate pair:
///   |root|^k (Q(k) sin(a k) + R(k) cos(a k)),  a = arg(root), im(root) > 0.
struct TrigTerm {
  GaussianRational root;
  std::vector<Rational> sin_poly;
  std::vector<Rational> cos_poly;
  friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

struct RealTerm {
  Rational theta;
  std::vector<Rational> poly;
  friend bool operator==(const RealTerm&, const RealTerm&) = default;
};

struct RealCorrelogramForm {
  std::vector<RealTerm> real_terms;
  std::vector<TrigTerm> trig_terms;
  friend bool operator==(const RealCorrelogramForm&, const RealCorrelogramForm&) = default;
};

RealCorrelogramForm to_real_form(const Correlogram& c);
Correlogram from_real_form(const RealCorrelogramForm& r, std::map<int, Rational> specials, int valid_from,
                           Rational variance);

/// Value of the real form at k, in floating point.
double eval_real_form(const RealCorrelogramForm& r, long k);

/// Human-readable rendering, e.g. "(1/sqrt(2))^k*((19/25)*sin(pi/4*k) + (41/50)*cos(pi/4*k))".
std::string to_string(const RealCorrelogramForm& r);
/// Symbolic angle of a Gaussian rational, e.g. "pi/4" or "atan(3/4)".
std::string angle_string(const GaussianRational& z);
/// Symbolic modulus of a Gaussian rational, e.g. "1/sqrt(2)".
std::string modulus_string(const GaussianRational& z);

}  // namespace armatri
