#include "armatri/montecarlo.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace armatri {
namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

long effective_burn_in(const SimConfig& cfg, const ArmaModel& m) {
  return cfg.burn_in >= 0 ? cfg.burn_in : 1000 + 50L * m.p();
}

double NormalSource::operator()() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
  const double u1 = 1.0 - static_cast<double>(gen_() >> 11) * scale;  // (0, 1]
  const double u2 = static_cast<double>(gen_() >> 11) * scale;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

std::vector<double> simulate(const ArmaModel& m, const SimConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("series length must be at least 1");
  require_valid(m);
  std::vector<double> alpha;
  std::vector<double> gamma;
  for (const auto& a : m.ar()) alpha.push_back(a.to_double());
  for (const auto& g : m.ma()) gamma.push_back(g.to_double());
  const double sigma = std::sqrt(m.sigma2().to_double());
  const long p = m.p();
  const long q = m.q();
  const long burn = effective_burn_in(cfg, m);
  const long total = burn + cfg.n;

  NormalSource normal(cfg.seed);
  std::vector<double> y(static_cast<std::size_t>(total));
  for (long t = 0; t < total; ++t) {
    double v = sigma * normal();
    for (long j = 1; j <= p && j <= t; ++j) v += alpha[j - 1] * y[t - j];
    y[t] = v;
  }
  std::vector<double> x(static_cast<std::size_t>(cfg.n));
  for (long t = 0; t < cfg.n; ++t) {
    const long s = burn + t;
    double v = y[s];
    for (long j = 1; j <= q && j <= s; ++j) v += gamma[j - 1] * y[s - j];
    x[t] = v;
  }
  return x;
}

std::vector<std::vector<double>> simulate_replicates(const ArmaModel& m, const SimConfig& cfg, unsigned threads) {
  if (cfg.replicates < 1) throw std::invalid_argument("at least one replicate is required");
  std::vector<std::vector<double>> out(static_cast<std::size_t>(cfg.replicates));
  auto run = [&](int r) {
    SimConfig c = cfg;
    c.seed = cfg.seed + static_cast<std::uint64_t>(r);
    out[r] = simulate(m, c);
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (int r = 0; r < cfg.replicates; ++r) run(r);
    return out;
  }
  require_valid(m);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int r = static_cast<int>(t); r < cfg.replicates; r += static_cast<int>(threads)) run(r);
    });
  for (auto& th : pool) th.join();
  return out;
}

AcfEstimate empirical_acf(const std::vector<double>& series, int max_lag) {
  const long n = static_cast<long>(series.size());
  if (max_lag < 0 || max_lag >= n) throw std::invalid_argument("max_lag must lie in [0, n)");
  double mean = 0;
  for (const double v : series) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> d(series.size());
  for (long t = 0; t < n; ++t) d[t] = series[t] - mean;
  double c0 = 0;
  for (const double v : d) c0 += v * v;

  AcfEstimate est;
  est.n_effective = n;
  double sum_sq = 0;
  for (int k = 0; k <= max_lag; ++k) {
    double ck = 0;
    for (long t = 0; t + k < n; ++t) ck += d[t] * d[t + k];
    const double r = k == 0 ? 1.0 : (c0 > 0 ? ck / c0 : 0.0);
    const double se = k == 0 ? 0.0 : std::sqrt((1.0 + 2.0 * sum_sq) / static_cast<double>(n));
    est.lags.push_back({k, r, se});
    if (k > 0) sum_sq += r * r;
  }
  return est;
}

std::vector<PeriodogramPoint> periodogram(const std::vector<double>& series, Taper taper) {
  const int n = static_cast<int>(series.size());
  if (n < 64) throw std::invalid_argument("periodogram needs at least 64 points");
  double mean = 0;
  for (const double v : series) mean += v;
  mean /= n;
  double var = 0;
  for (const double v : series) var += (v - mean) * (v - mean);
  var /= n;

  double* in = fftw_alloc_real(static_cast<std::size_t>(n));
  fftw_complex* out = fftw_alloc_complex(static_cast<std::size_t>(n / 2 + 1));
  fftw_plan plan;
  {
    std::lock_guard lock(fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in, out, FFTW_ESTIMATE);
  }
  double window_energy = 0;
  for (int t = 0; t < n; ++t) {
    double w = 1;
    if (taper == Taper::Hann) {
      const double sn = std::sin(std::numbers::pi * (t + 0.5) / n);
      w = sn * sn;
    }
    window_energy += w * w;
    in[t] = w * (series[t] - mean);
  }
  fftw_execute(plan);

  std::vector<PeriodogramPoint> pg;
  for (int j = 1; 2 * j < n; ++j) {
    const double re = out[j][0];
    const double im = out[j][1];
    const double power = var > 0 ? (re * re + im * im) / (window_energy * var) : 0.0;
    pg.push_back({2.0 * std::numbers::pi * j / n, power});
  }
  {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return pg;
}

double BandComparison::relative_error() const { return std::fabs(mean_power - mean_omega) / std::fabs(mean_omega); }

std::vector<BandComparison> compare_bands(const std::vector<PeriodogramPoint>& pg, const SpectralDensity& s,
                                          int bands) {
  if (bands < 1) throw std::invalid_argument("band count must be positive");
  const double width = std::numbers::pi / bands;
  std::vector<BandComparison> out(static_cast<std::size_t>(bands));
  std::vector<long> count(static_cast<std::size_t>(bands), 0);
  for (int b = 0; b < bands; ++b) {
    out[b].beta_lo = b * width;
    out[b].beta_hi = (b + 1) * width;
  }
  for (const auto& pt : pg) {
    const int b = std::min(bands - 1, static_cast<int>(pt.beta / width));
    out[b].mean_power += pt.power;
    out[b].mean_omega += eval_omega(s, pt.beta);
    ++count[b];
  }
  for (int b = 0; b < bands; ++b) {
    if (count[b] == 0) continue;
    out[b].mean_power /= static_cast<double>(count[b]);
    out[b].mean_omega /= static_cast<double>(count[b]);
  }
  return out;
}

}  // namespace armatri
