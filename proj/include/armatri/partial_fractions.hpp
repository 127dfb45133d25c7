#pragma once

#include "armatri/rational_function.hpp"

#include <vector>

namespace armatri {

/// One summand of a partial-fraction expansion: c*y^m or c/(y - lambda)^ell.
struct PartialFractionTerm {
  enum class Kind { Power, Pole };

  Kind kind = Kind::Power;
  GaussianRational c;
  int m = 0;                // Power
  GaussianRational lambda;  // Pole, nonzero
  int ell = 0;              // Pole, >= 1

  static PartialFractionTerm power(GaussianRational c, int m);
  static PartialFractionTerm pole(GaussianRational c, GaussianRational lambda, int ell);

  [[nodiscard]] bool is_pole() const { return kind == Kind::Pole; }
  [[nodiscard]] GaussianRational eval(const GaussianRational& y) const;
  [[nodiscard]] std::complex<long double> eval(std::complex<long double> y) const;
  [[nodiscard]] RationalFunction as_function() const;
  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

/// Complex partial-fraction expansion of f.
///
/// The polynomial part and any pole at zero appear as Power terms (the latter
/// with negative m); every other pole lambda of multiplicity r yields Pole
/// terms for ell = 1..r. Power terms come first ordered by m, then poles in
/// canonical order of lambda and increasing ell.
std::vector<PartialFractionTerm> partial_fractions(const RationalFunction& f);

/// Sum of terms as a single reduced rational function.
RationalFunction recombine(const std::vector<PartialFractionTerm>& terms);

}  // namespace armatri
