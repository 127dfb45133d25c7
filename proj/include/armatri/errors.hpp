#pragma once

#include <stdexcept>
#include <string>

namespace armatri {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial has a root outside the Gaussian-rational field.
class RootsNotExpressible : public Error {
 public:
  using Error::Error;
};

/// A model, correlogram or density violates one of its defining conditions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Some characteristic root lies on or outside the unit circle.
class NotStationary : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The spectral density is not non-negative, bounded and of average one.
class IllegitimateSpectrum : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The denominator of a density vanishes on [0, pi].
class DenominatorZero : public IllegitimateSpectrum {
 public:
  using IllegitimateSpectrum::IllegitimateSpectrum;
};

/// rho_0 recovered from a density differs from 1.
class NormalizationViolated : public IllegitimateSpectrum {
 public:
  using IllegitimateSpectrum::IllegitimateSpectrum;
};

/// A correlogram term has |theta| >= 1, so its series does not converge.
class NotSummable : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed input (bad number syntax, schema mismatch, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace armatri
