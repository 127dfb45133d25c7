#pragma once

#include "armatri/correlogram.hpp"
#include "armatri/model.hpp"
#include "armatri/partial_fractions.hpp"
#include "armatri/spectral.hpp"

#include <span>
#include <vector>

namespace armatri {

/// One characteristic root of the AR part with its polynomial coefficient
/// A(k) = A_1 + A_2 k + ... + A_m k^(m-1).
struct ArTerm {
  GaussianRational lambda;
  int multiplicity = 1;
  std::vector<GaussianRational> coeffs;
  friend bool operator==(const ArTerm&, const ArTerm&) = default;
};

/// Correlogram of the pure AR process Y_n driven by the same innovations:
/// rho~_k = sum_i A_i(k) lambda_i^k, valid for all k > -p, with variance V~.
struct ArCorrelogram {
  std::vector<ArTerm> terms;
  Rational ar_variance;
  /// rho~_1 .. rho~_p from the Yule-Walker system.
  std::vector<Rational> rho;
  friend bool operator==(const ArCorrelogram&, const ArCorrelogram&) = default;
};

/// The closed form at any k > -p (exact).
GaussianRational ar_rho(const ArCorrelogram& a, long k);

/// Throws NotStationary or RootsNotExpressible.
ArCorrelogram ar_correlogram(std::span<const Rational> alphas, const Rational& sigma2);

Correlogram ag_to_correlogram(const ArmaModel& m);

/// omega = 1 + 2 sum_{k>=1} rho_k cos(k beta) in closed form.
SpectralDensity correlogram_to_spectral(const Correlogram& c);

SpectralDensity ag_to_spectral(const ArmaModel& m);

/// Complex partial fractions of omega(y), y = exp(i beta).
std::vector<PartialFractionTerm> y_partial_fractions(const SpectralDensity& s);

/// Residue route: keep poles inside the unit circle and non-negative powers.
/// Throws NormalizationViolated when rho_0 comes out different from 1.
Correlogram spectral_to_correlogram(const SpectralDensity& s);

enum class MaPolicy { Invertible, EnumerateAll, AsGiven };

/// Which root of y + 1/y = 2 theta to take for each MA factor.
/// chosen_y is only read for AsGiven and must list one y per MA root.
struct MaSelection {
  MaPolicy policy = MaPolicy::Invertible;
  std::vector<GaussianRational> chosen_y;
};

/// One model per admissible MA selection, sorted and free of duplicates.
/// Throws RootsNotExpressible, or IllegitimateSpectrum (including
/// NormalizationViolated when omega does not average to 1).
std::vector<ArmaModel> spectral_to_ag(const SpectralDensity& s, const MaSelection& sel = {});

/// Every coefficient model with this correlogram (composite route through
/// the spectral form). Each result satisfies verify_gamma_equations.
std::vector<ArmaModel> correlogram_to_ag(const Correlogram& c);

/// Checks the nonlinear system linking the MA coefficients to the correlogram,
/// term by term and at every special lag. The innovation scale is irrelevant.
bool verify_gamma_equations(std::span<const Rational> alphas, std::span<const Rational> gammas,
                            const Correlogram& c);
bool verify_gamma_equations(const ArmaModel& m, const Correlogram& c);

/// binom(k-1, ell-1) as a polynomial in k.
Poly binomial_poly(int ell);

}  // namespace armatri
