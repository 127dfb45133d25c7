#pragma once

#include "armatri/model.hpp"
#include "armatri/spectral.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace armatri {

/// Name recorded in simulation metadata; change it whenever the stream changes.
inline constexpr std::string_view kGeneratorName = "mt19937_64/box-muller";

struct SimConfig {
  long n = 10000;
  long burn_in = -1;  // negative: 1000 + 50 p
  std::uint64_t seed = 1;
  int replicates = 1;
};

long effective_burn_in(const SimConfig& cfg, const ArmaModel& m);

/// Standard normal deviates from mt19937_64 via the Box-Muller transform.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : gen_(seed) {}
  double operator()();

 private:
  std::mt19937_64 gen_;
  double spare_ = 0;
  bool has_spare_ = false;
};

/// X_n of the model after burn-in: AR recursion first, then the MA filter.
/// Throws NotStationary.
std::vector<double> simulate(const ArmaModel& m, const SimConfig& cfg);

/// One series per replicate, replicate r seeded with seed + r.
std::vector<std::vector<double>> simulate_replicates(const ArmaModel& m, const SimConfig& cfg, unsigned threads = 1);

struct AcfLag {
  int k = 0;
  double rho_hat = 0;
  double std_err = 0;
};

struct AcfEstimate {
  std::vector<AcfLag> lags;
  long n_effective = 0;
};

/// Biased sample autocorrelation with Bartlett standard errors.
AcfEstimate empirical_acf(const std::vector<double>& series, int max_lag);

struct PeriodogramPoint {
  double beta = 0;
  double power = 0;
};

/// Data window applied before the transform. Hann keeps sidelobe leakage far
/// below the raw periodogram's, which matters when the density spans many
/// orders of magnitude (e.g. an MA root at -1).
enum class Taper { None, Hann };

/// |DFT(w * (x - mean))|^2 / (sum w^2 * sample variance) at 2 pi j / n strictly
/// inside (0, pi). White noise has mean power 1. Requires at least 64 points.
std::vector<PeriodogramPoint> periodogram(const std::vector<double>& series, Taper taper = Taper::Hann);

struct BandComparison {
  double beta_lo = 0;
  double beta_hi = 0;
  double mean_power = 0;
  double mean_omega = 0;
  [[nodiscard]] double relative_error() const;
};

/// Splits (0, pi) into equal bands and averages both the periodogram and the
/// density over the periodogram frequencies in each band.
std::vector<BandComparison> compare_bands(const std::vector<PeriodogramPoint>& pg, const SpectralDensity& s,
                                          int bands = 16);

}  // namespace armatri
