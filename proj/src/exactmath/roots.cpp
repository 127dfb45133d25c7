#include "armatri/roots.hpp"

#include "armatri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace armatri {
namespace {

using cld = std::complex<long double>;

// Simultaneous Aberth-Ehrlich iteration on a square-free polynomial.
std::vector<cld> approximate_roots(const Poly& p) {
  const int n = p.degree();
  std::vector<cld> a(static_cast<std::size_t>(n) + 1);
  const cld lead = p.leading().to_complex_ld();
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = p.coeff(i).to_complex_ld() / lead;

  auto eval = [&](cld z, cld& deriv) {
    cld v = a[static_cast<std::size_t>(n)];
    deriv = 0;
    for (int i = n - 1; i >= 0; --i) {
      deriv = deriv * z + v;
      v = v * z + a[static_cast<std::size_t>(i)];
    }
    return v;
  };

  long double radius = std::pow(std::max(std::abs(a[0]), 1e-30L), 1.0L / n);
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[static_cast<std::size_t>(i)]) / n);
  std::vector<cld> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (int k = 0; k < n; ++k) {
      cld& zk = z[static_cast<std::size_t>(k)];
      cld d;
      const cld v = eval(zk, d);
      if (v == cld(0)) continue;
      const cld w = v / d;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (zk - z[static_cast<std::size_t>(j)]);
      const cld step = w / (1.0L - w * s);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      zk -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(zk)));
    }
    if (worst < 1e-18L) break;
  }
  return z;
}

// Continued-fraction convergents of x that lie within tol of x, smallest denominators first.
std::vector<Rational> rational_candidates(long double x, long double tol) {
  std::vector<Rational> out;
  if (std::fabs(x) <= tol) out.emplace_back(0);
  mpz_class h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
  long double frac = x;
  for (int step = 0; step < 40 && out.size() < 3; ++step) {
    const long double fl = std::floor(frac);
    if (std::fabs(fl) > 1e18L) break;
    const mpz_class a(static_cast<double>(fl));
    const mpz_class h = a * h_prev + h_prev2;
    const mpz_class k = a * k_prev + k_prev2;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    if (k > mpz_class("1000000000000")) break;
    const Rational cand(h, k);
    if (std::fabs(cand.to_long_double() - x) <= tol && !cand.is_zero()) out.push_back(cand);
    const long double rest = frac - fl;
    if (rest < 1e-30L) break;
    frac = 1.0L / rest;
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<std::pair<mpz_class, int>> factors;
  for (mpz_class d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [prime, e] : factors) {
    const std::size_t sz = out.size();
    mpz_class pw = 1;
    for (int i = 1; i <= e; ++i) {
      pw *= prime;
      for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

// Rational-root theorem over Q for a real polynomial with nonzero constant term.
std::optional<Rational> rational_root_by_theorem(const Poly& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().raw().get_den_mpz_t());
  const mpz_class a0 = p.coeff(0).re().raw().get_num() * (lcm_den / p.coeff(0).re().raw().get_den());
  const mpz_class an = p.leading().re().raw().get_num() * (lcm_den / p.leading().re().raw().get_den());
  const mpz_class limit("1000000000000");
  if (abs(a0) > limit || abs(an) > limit) return std::nullopt;
  const auto num_div = divisors(a0);
  const auto den_div = divisors(an);
  if (num_div.size() * den_div.size() > 50000) return std::nullopt;
  for (const auto& d : num_div) {
    for (const auto& e : den_div) {
      for (int s : {1, -1}) {
        const Rational cand(mpz_class(s * d), e);
        if (p.eval(cand).is_zero()) return cand;
      }
    }
  }
  return std::nullopt;
}

void solve_low_degree(const Poly& g, std::vector<GaussianRational>& out) {
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  if (g.degree() == 2) {
    const GaussianRational a = g.coeff(2);
    const GaussianRational b = g.coeff(1);
    const GaussianRational c = g.coeff(0);
    const GaussianRational disc = b * b - GaussianRational(4) * a * c;
    const auto s = sqrt_exact(disc);
    if (!s) throw RootsNotExpressible("quadratic factor " + g.str() + " has roots outside Q(i)");
    const GaussianRational two_a = GaussianRational(2) * a;
    out.push_back((-b + *s) / two_a);
    out.push_back((-b - *s) / two_a);
  }
}

// Roots of a square-free polynomial of positive degree with g(0) != 0.
std::vector<GaussianRational> squarefree_roots(Poly g) {
  std::vector<GaussianRational> found;
  const bool real = g.is_real();
  auto take = [&](const GaussianRational& r) {
    found.push_back(r);
    g = g.exact_div(Poly::linear(r));
    if (real && !r.is_real()) {
      found.push_back(r.conj());
      g = g.exact_div(Poly::linear(r.conj()));
    }
  };

  while (g.degree() >= 3) {
    bool progressed = false;
    for (const cld& z : approximate_roots(g)) {
      if (g.degree() < 1) break;
      const long double tol = 1e-9L * std::max(1.0L, std::abs(z));
      auto re_c = rational_candidates(z.real(), tol);
      auto im_c = rational_candidates(z.imag(), tol);
      if (real && std::fabs(z.imag()) <= tol) im_c = {Rational(0)};
      bool hit = false;
      for (const auto& re : re_c) {
        for (const auto& im : im_c) {
          const GaussianRational cand(re, im);
          if (g.eval(cand).is_zero()) {
            take(cand);
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      progressed = progressed || hit;
    }
    if (!progressed && real && g.degree() >= 3) {
      if (auto r = rational_root_by_theorem(g)) {
        take(GaussianRational(*r));
        progressed = true;
      }
    }
    if (!progressed)
      throw RootsNotExpressible("factor " + g.str() + " has no root in Q(i)");
  }
  solve_low_degree(g, found);
  return found;
}

}  // namespace

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  if (p.degree() < 1) return {};
  const Poly f = p.monic();
  const Poly fp = f.derivative();
  const Poly a0 = gcd(f, fp);
  Poly b = f.exact_div(a0);
  Poly c = fp.exact_div(a0);
  Poly d = c - b.derivative();
  std::vector<Poly> out;
  while (b.degree() > 0) {
    const Poly a = gcd(b, d);
    b = b.exact_div(a);
    c = d.exact_div(a);
    d = c - b.derivative();
    out.push_back(a);
  }
  return out;
}

std::vector<RootMultiplicity> roots_exact(const Poly& p) {
  if (p.degree() < 1) throw std::invalid_argument("roots_exact requires a polynomial of degree >= 1");
  std::vector<RootMultiplicity> out;

  int zero_mult = 0;
  while (p.coeff(zero_mult).is_zero()) ++zero_mult;
  if (zero_mult > 0) out.push_back({GaussianRational(0), zero_mult});
  const Poly rest = Poly(std::vector<GaussianRational>(p.coeffs().begin() + zero_mult, p.coeffs().end()));

  if (rest.degree() > 0) {
    const auto factors = squarefree_decomposition(rest);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      for (auto& r : squarefree_roots(factors[i])) out.push_back({std::move(r), static_cast<int>(i) + 1});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return canonical_less(a.root, b.root); });
  return out;
}

std::vector<GaussianRational> flatten_roots(const std::vector<RootMultiplicity>& roots) {
  std::vector<GaussianRational> out;
  for (const auto& r : roots)
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.root);
  return out;
}

}  // namespace armatri
