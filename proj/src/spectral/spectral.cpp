#include "armatri/spectral.hpp"

#include "armatri/errors.hpp"
#include "armatri/partial_fractions.hpp"
#include "armatri/roots.hpp"
#include "armatri/trig.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

namespace armatri {
namespace {

// P = scale * P' with P' a primitive integer polynomial.
std::pair<Rational, Poly> primitive_part(const Poly& p) {
  mpz_class l = 1;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().raw().get_den_mpz_t());
  for (const auto& c : p.coeffs()) {
    const mpz_class v = c.re().num() * (l / c.re().den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 0) return {Rational(1), p};
  const Rational scale(g, l);
  Poly prim = p * GaussianRational(scale.inverse());
  return {scale, std::move(prim)};
}

}  // namespace

SpectralDensity::SpectralDensity(Poly numerator, Poly denominator, Rational variance)
    : variance_(std::move(variance)) {
  if (!numerator.is_real() || !denominator.is_real())
    throw ValidationError("spectral polynomials must have rational coefficients");
  if (denominator.is_zero()) throw ValidationError("spectral denominator is zero");
  if (numerator.is_zero()) throw ValidationError("spectral numerator is zero");
  if (variance_.sign() <= 0) throw ValidationError("variance must be positive");
  const RationalFunction f(std::move(numerator), std::move(denominator));
  num_ = f.num();
  den_ = f.den();
}

SpectralDensity SpectralDensity::white_noise(Rational variance) {
  return {Poly::constant(1), Poly::constant(1), std::move(variance)};
}

Rational SpectralDensity::at_cos(const Rational& c) const {
  const GaussianRational d = den_.eval(c);
  if (d.is_zero()) throw DenominatorZero("spectral density has a pole at cos(beta) = " + c.str());
  return (num_.eval(c) / d).re();
}

RationalFunction SpectralDensity::y_form() const { return cos_ratio_to_y(num_, den_); }

DisplayForm display_form(const SpectralDensity& s) {
  auto [ns, np] = primitive_part(s.numerator());
  auto [ds, dp] = primitive_part(s.denominator());
  const GaussianRational anchor = dp.coeff(0).is_zero() ? dp.leading() : dp.coeff(0);
  if (anchor.re().sign() < 0) {
    dp = -dp;
    ds = -ds;
  }
  Rational factor = ns / ds;
  if (factor.sign() < 0) {
    factor = -factor;
    np = -np;
  }
  return {factor, np, dp};
}

std::string to_string(const SpectralDensity& s) {
  const DisplayForm d = display_form(s);
  std::ostringstream os;
  os << d.factor.str() << " * (" << d.numerator.str("c") << ") / (" << d.denominator.str("c") << ")";
  return os.str();
}

double eval_omega(const SpectralDensity& s, double beta) {
  const long double c = std::cos(static_cast<long double>(beta));
  const long double t = s.denominator().eval_real(c);
  if (t == 0.0L) throw DenominatorZero("spectral density has a pole at beta = " + std::to_string(beta));
  const double v = static_cast<double>(s.numerator().eval_real(c) / t);
  if (!std::isfinite(v)) throw DenominatorZero("spectral density is unbounded at beta = " + std::to_string(beta));
  return v;
}

RationalFunction cos_ratio_to_y(const Poly& numerator, const Poly& denominator) {
  const int q = numerator.degree();
  const int p = denominator.degree();
  Poly n = cos_poly_to_y(numerator);
  Poly d = cos_poly_to_y(denominator);
  if (p >= q) n *= Poly::monomial(1, p - q);
  else d *= Poly::monomial(1, q - p);
  return {std::move(n), std::move(d)};
}

Rational exact_average(const Poly& numerator, const Poly& denominator) {
  // (1/2 pi i) * contour integral of omega(y)/y: a constant term c contributes c,
  // a pole term c/(y - l)^m contributes c*(-l)^(-m) when |l| > 1 and nothing when |l| < 1.
  GaussianRational avg;
  for (const auto& t : partial_fractions(cos_ratio_to_y(numerator, denominator))) {
    if (!t.is_pole()) {
      if (t.m == 0) avg += t.c;
      continue;
    }
    const Rational n = t.lambda.norm();
    if (n == Rational(1)) throw DenominatorZero("spectral density has a pole on the unit circle at y = " + t.lambda.str());
    if (n > Rational(1)) avg += t.c * (-t.lambda).pow(-t.ell);
  }
  if (!avg.is_real()) throw std::logic_error("average of a real density came out complex");
  return avg.re();
}

double integrate_omega(const SpectralDensity& s, double abs_tol) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&s](double beta) { return eval_omega(s, beta); };
  const double pi = std::numbers::pi;
  return gauss_kronrod<double, 15>::integrate(f, 0.0, pi, 30, abs_tol / (4 * pi));
}

Rational normalize(const Poly& numerator_raw, const Poly& denominator) {
  const Rational avg = exact_average(numerator_raw, denominator);
  if (avg.sign() <= 0) throw IllegitimateSpectrum("raw spectral ratio has a non-positive average");
  const Rational factor = avg.inverse();
  const SpectralDensity scaled(numerator_raw * GaussianRational(factor), denominator, Rational(1));
  const double integral = integrate_omega(scaled);
  if (std::fabs(integral / std::numbers::pi - 1.0) > 1e-7)
    throw std::logic_error("exact and numerical normalisation disagree: integral = " + std::to_string(integral));
  return factor;
}

LegitimacyReport check_legitimate(const SpectralDensity& s, const LegitimacyOptions& opts) {
  LegitimacyReport r;
  const int n = std::max(opts.grid_points, 2);
  const double pi = std::numbers::pi;
  auto beta_at = [&](int j) { return pi * j / (n - 1); };

  if (s.p() == 0) {
    r.bounded = true;
    r.exact_pole_check = true;
  } else {
    try {
      r.bounded = true;
      for (const auto& root : roots_exact(s.denominator())) {
        if (root.root.is_real() && root.root.re() >= Rational(-1) && root.root.re() <= Rational(1)) {
          r.bounded = false;
          r.reason = "denominator vanishes at cos(beta) = " + root.root.re().str();
        }
      }
      r.exact_pole_check = true;
    } catch (const RootsNotExpressible&) {
      r.exact_pole_check = false;
      int sign = 0;
      for (int j = 0; j < n && r.bounded; ++j) {
        const long double t = s.denominator().eval_real(std::cos(static_cast<long double>(beta_at(j))));
        const int sj = (t > 0) - (t < 0);
        if (sj == 0 || (sign != 0 && sj != sign)) {
          r.bounded = false;
          r.reason = "denominator changes sign on [0, pi]";
        }
        sign = sj;
      }
    }
  }

  const unsigned threads = std::max(1u, opts.threads);
  std::vector<double> chunk_min(threads, std::numeric_limits<double>::infinity());
  auto work = [&](unsigned t) {
    for (int j = static_cast<int>(t); j < n; j += static_cast<int>(threads)) {
      try {
        chunk_min[t] = std::min(chunk_min[t], eval_omega(s, beta_at(j)));
      } catch (const DenominatorZero&) {
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  r.min_value = *std::min_element(chunk_min.begin(), chunk_min.end());
  r.nonnegative = r.min_value >= -opts.negativity_slack;
  if (!r.nonnegative && r.reason.empty()) r.reason = "spectral density is negative somewhere on [0, pi]";

  if (r.bounded) {
    r.integral = integrate_omega(s);
    r.normalized = std::fabs(r.integral - pi) <= opts.integral_tol;
    if (!r.normalized && r.reason.empty())
      r.reason = "integral of the density over [0, pi] is " + std::to_string(r.integral) + ", not pi";
  } else {
    r.integral = std::numeric_limits<double>::infinity();
  }
  return r;
}

}  // namespace armatri
