#pragma once

#include "armatri/rational_function.hpp"

#include <string>

namespace armatri {

/// omega(beta) = S(cos beta) / T(cos beta), with the process variance V.
///
/// S and T have rational coefficients. The stored pair is canonical: no
/// common factor and a monic T, with the sigma^2/V factor folded into S.
class SpectralDensity {
 public:
  SpectralDensity(Poly numerator, Poly denominator, Rational variance);
  static SpectralDensity white_noise(Rational variance);

  [[nodiscard]] const Poly& numerator() const { return num_; }
  [[nodiscard]] const Poly& denominator() const { return den_; }
  [[nodiscard]] const Rational& variance() const { return variance_; }
  [[nodiscard]] int p() const { return den_.degree(); }
  [[nodiscard]] int q() const { return num_.degree(); }

  /// S(c)/T(c) at an exact c.
  [[nodiscard]] Rational at_cos(const Rational& c) const;
  /// omega as a rational function of y = exp(i beta).
  [[nodiscard]] RationalFunction y_form() const;

  friend bool operator==(const SpectralDensity&, const SpectralDensity&) = default;

 private:
  Poly num_;
  Poly den_;
  Rational variance_;
};

/// factor * S'(c) / T'(c) with S', T' primitive integer polynomials.
struct DisplayForm {
  Rational factor;
  Poly numerator;
  Poly denominator;
};
DisplayForm display_form(const SpectralDensity& s);
std::string to_string(const SpectralDensity& s);

/// omega(beta) in floating point. Throws DenominatorZero at a pole.
double eval_omega(const SpectralDensity& s, double beta);

/// S(c)/T(c) as a function of y: y^(p-q) * (y^q S) / (y^p T) with c = (y + 1/y)/2.
RationalFunction cos_ratio_to_y(const Poly& numerator, const Poly& denominator);

/// (1/pi) * integral_0^pi S(cos b)/T(cos b) db, exact, from the residues of
/// omega(y)/y inside the unit circle. Throws DenominatorZero for a pole on it.
Rational exact_average(const Poly& numerator, const Poly& denominator);

/// The factor k with (1/pi) * integral_0^pi k S/T = 1, computed exactly and
/// cross-checked by quadrature. Throws DenominatorZero or IllegitimateSpectrum.
Rational normalize(const Poly& numerator_raw, const Poly& denominator);

/// Adaptive Gauss-Kronrod integral of omega over [0, pi].
double integrate_omega(const SpectralDensity& s, double abs_tol = 1e-10);

struct LegitimacyOptions {
  int grid_points = 10001;
  double integral_tol = 1e-9;
  double negativity_slack = 1e-12;
  unsigned threads = 1;
};

struct LegitimacyReport {
  bool bounded = false;
  bool exact_pole_check = false;  // false when the pole check fell back to the grid
  bool normalized = false;
  bool nonnegative = false;
  double integral = 0;
  double min_value = 0;
  std::string reason;

  [[nodiscard]] bool legitimate() const { return bounded && normalized && nonnegative; }
};

LegitimacyReport check_legitimate(const SpectralDensity& s, const LegitimacyOptions& opts = {});

}  // namespace armatri
