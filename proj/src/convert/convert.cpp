#include "armatri/convert.hpp"

#include "armatri/errors.hpp"
#include "armatri/roots.hpp"
#include "armatri/trig.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace armatri {
namespace {

using Matrix = std::vector<std::vector<GaussianRational>>;

// Solves a x = b exactly by Gauss-Jordan elimination; a must be nonsingular.
std::vector<GaussianRational> solve(Matrix a, std::vector<GaussianRational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const GaussianRational inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const GaussianRational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

GaussianRational power_of_k(long k, int j) { return j == 0 ? GaussianRational(1) : GaussianRational(Rational(k)).pow(j); }

// gamma_0 = 1 followed by the MA coefficients.
std::vector<Rational> full_ma(std::span<const Rational> gammas) {
  std::vector<Rational> g{Rational(1)};
  g.insert(g.end(), gammas.begin(), gammas.end());
  return g;
}

// True autocorrelation of the AR part at any integer lag.
Rational ar_rho_sym(const ArCorrelogram& a, long k) {
  if (k < 0) k = -k;
  if (k == 0) return 1;
  return ar_rho(a, k).re();
}

// sum_{i,j} g_i g_j rho~_{|i-j|}: V / V~.
Rational ma_energy(const ArCorrelogram& a, const std::vector<Rational>& g) {
  Rational d;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      d += g[i] * g[j] * ar_rho_sym(a, static_cast<long>(i) - static_cast<long>(j));
  return d;
}

// Polynomial in k of sum_{i,j} g_i g_j lambda^(i-j) A(k + i - j).
Poly pushed_poly(const ArTerm& t, const std::vector<Rational>& g) {
  const Poly base(t.coeffs);
  Poly acc;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[i].is_zero() || g[j].is_zero()) continue;
      const long d = static_cast<long>(i) - static_cast<long>(j);
      acc += base.shift(Rational(d)) * (GaussianRational(g[i] * g[j]) * t.lambda.pow(d));
    }
  return acc;
}

// sum_{k>=1} k^j x^k = N_j(x) / (1 - x)^(j+1).
std::vector<Poly> eulerian_numerators(int max_j) {
  std::vector<Poly> n{Poly{0, 1}};
  const Poly x{0, 1};
  const Poly one_minus_x{1, -1};
  for (int j = 0; j < max_j; ++j)
    n.push_back(x * (n[j].derivative() * one_minus_x + n[j] * GaussianRational(j + 1)));
  return n;
}

std::vector<Rational> alphas_from_roots(const std::vector<GaussianRational>& ys) {
  const Poly p = poly_from_roots(ys);
  const int deg = p.degree();
  std::vector<Rational> a;
  for (int j = 1; j <= deg; ++j) {
    const GaussianRational c = p.coeff(deg - j);
    if (!c.is_real()) throw IllegitimateSpectrum("AR roots are not closed under conjugation");
    a.push_back(-c.re());
  }
  return a;
}

std::vector<Rational> gammas_from_roots(const std::vector<GaussianRational>& ys) {
  const Poly p = poly_from_roots(ys);
  const int deg = p.degree();
  std::vector<Rational> g;
  for (int j = 1; j <= deg; ++j) {
    const GaussianRational c = p.coeff(deg - j);
    if (!c.is_real()) return {};
    g.push_back(c.re());
  }
  return g;
}

// Both solutions of y^2 - 2 theta y + 1 = 0, the one with |y| <= 1 first.
std::pair<GaussianRational, GaussianRational> reciprocal_pair(const GaussianRational& theta) {
  const auto d = sqrt_exact(theta * theta - GaussianRational(1));
  if (!d) throw RootsNotExpressible("y + 1/y = 2*(" + theta.str() + ") has no Gaussian-rational solution");
  GaussianRational a = theta + *d;
  GaussianRational b = theta - *d;
  if (a.norm() > b.norm() || (a.norm() == b.norm() && a.im().sign() < 0)) std::swap(a, b);
  return {a, b};
}

bool conjugate_closed(std::vector<GaussianRational> ys) {
  auto less = [](const GaussianRational& a, const GaussianRational& b) { return canonical_less(a, b); };
  std::vector<GaussianRational> cs;
  for (const auto& y : ys) cs.push_back(y.conj());
  std::sort(ys.begin(), ys.end(), less);
  std::sort(cs.begin(), cs.end(), less);
  return ys == cs;
}

bool model_less(const ArmaModel& a, const ArmaModel& b) {
  auto lex = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  if (a.ar() != b.ar()) return lex(a.ar(), b.ar());
  if (a.ma() != b.ma()) return lex(a.ma(), b.ma());
  return a.sigma2() < b.sigma2();
}

Rational sum_of(const std::vector<Rational>& v, bool alternate) {
  Rational s;
  for (std::size_t j = 0; j < v.size(); ++j) s += (alternate && j % 2 == 1) ? -v[j] : v[j];
  return s;
}

// S/T = kappa * L_gamma / L_phi with kappa = sigma^2 / V; returns sigma^2.
Rational recover_sigma2(const SpectralDensity& s, const std::vector<Rational>& alphas,
                        const std::vector<Rational>& gammas) {
  std::vector<Rational> phi{Rational(-1)};
  phi.insert(phi.end(), alphas.begin(), alphas.end());
  const std::vector<Rational> g = full_ma(gammas);
  for (const bool alt : {false, true}) {
    const Rational sg = sum_of(g, alt);
    if (sg.is_zero()) continue;
    const Rational sp = sum_of(phi, alt);
    const Rational omega = s.at_cos(alt ? Rational(-1) : Rational(1));
    return s.variance() * omega * sp * sp / (sg * sg);
  }
  const Poly lg = symmetric_laurent_to_cos(autocorrelation_half(g));
  const Poly lp = symmetric_laurent_to_cos(autocorrelation_half(phi));
  const GaussianRational kappa =
      s.numerator().leading() * lp.leading() / (s.denominator().leading() * lg.leading());
  return s.variance() * kappa.re();
}

}  // namespace

Poly binomial_poly(int ell) {
  Poly p = Poly::constant(1);
  Rational fact = 1;
  for (int j = 1; j < ell; ++j) {
    p *= Poly{GaussianRational(-j), 1};
    fact *= Rational(j);
  }
  return p * GaussianRational(fact.inverse());
}

GaussianRational ar_rho(const ArCorrelogram& a, long k) {
  GaussianRational acc;
  for (const auto& t : a.terms) {
    GaussianRational poly;
    for (std::size_t j = 0; j < t.coeffs.size(); ++j) poly += t.coeffs[j] * power_of_k(k, static_cast<int>(j));
    acc += poly * t.lambda.pow(k);
  }
  return acc;
}

ArCorrelogram ar_correlogram(std::span<const Rational> alphas, const Rational& sigma2) {
  ArCorrelogram out;
  const int p = static_cast<int>(alphas.size());
  if (p == 0) {
    out.ar_variance = sigma2;
    return out;
  }

  const auto roots = roots_exact(char_poly(alphas));
  for (const auto& r : roots)
    if (r.root.norm() >= Rational(1))
      throw NotStationary("AR root " + r.root.str() + " is not strictly inside the unit circle");

  // rho~_i - sum_j alpha_j rho~_{|i-j|} = 0 for i = 1..p, with rho~_0 = 1.
  Matrix a(p, std::vector<GaussianRational>(p));
  std::vector<GaussianRational> b(p);
  for (int i = 1; i <= p; ++i) {
    a[i - 1][i - 1] += 1;
    for (int j = 1; j <= p; ++j) {
      const int lag = std::abs(i - j);
      if (lag == 0) b[i - 1] += alphas[j - 1];
      else a[i - 1][lag - 1] -= alphas[j - 1];
    }
  }
  const auto r = solve(std::move(a), std::move(b));
  std::vector<Rational> rho{Rational(1)};
  for (const auto& v : r) rho.push_back(v.re());
  out.rho.assign(rho.begin() + 1, rho.end());

  // Fit A_{i,j} against rho~_0 .. rho~_{p-1}.
  Matrix m(p, std::vector<GaussianRational>(p));
  for (int k = 0; k < p; ++k) {
    int col = 0;
    for (const auto& root : roots) {
      const GaussianRational lk = root.root.pow(k);
      for (int j = 0; j < root.multiplicity; ++j) m[k][col++] = power_of_k(k, j) * lk;
    }
  }
  const auto coef = solve(std::move(m), std::vector<GaussianRational>(rho.begin(), rho.begin() + p));
  int col = 0;
  for (const auto& root : roots) {
    ArTerm t{root.root, root.multiplicity, {}};
    for (int j = 0; j < root.multiplicity; ++j) t.coeffs.push_back(coef[col++]);
    out.terms.push_back(std::move(t));
  }

  Rational s;
  for (int j = 1; j <= p; ++j) s += alphas[j - 1] * rho[j];
  out.ar_variance = sigma2 / (Rational(1) - s);
  return out;
}

Correlogram ag_to_correlogram(const ArmaModel& m) {
  require_valid(m);
  const ArCorrelogram a = ar_correlogram(m.ar(), m.sigma2());
  const std::vector<Rational> g = full_ma(m.ma());
  const Rational d0 = ma_energy(a, g);
  const Rational variance = a.ar_variance * d0;

  std::vector<CorrelogramTerm> terms;
  for (const auto& t : a.terms) terms.push_back({t.lambda, pushed_poly(t, g) * GaussianRational(d0.inverse())});

  const int valid_from = m.q() - m.p() + 1;
  std::map<int, Rational> specials;
  for (int k = 0; k < valid_from; ++k) {
    Rational acc;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        acc += g[i] * g[j] * ar_rho_sym(a, k + static_cast<long>(i) - static_cast<long>(j));
    specials.emplace(k, acc / d0);
  }
  return {std::move(terms), std::move(specials), valid_from, variance};
}

SpectralDensity correlogram_to_spectral(const Correlogram& c) {
  int max_deg = 0;
  for (const auto& t : c.terms()) {
    if (t.theta.norm() >= Rational(1)) throw NotSummable("correlogram base " + t.theta.str() + " has |theta| >= 1");
    max_deg = std::max(max_deg, t.poly.degree());
  }
  const auto numerators = eulerian_numerators(max_deg);

  // g(y) = sum_{k>=1} general(k) y^k.
  RationalFunction g;
  for (const auto& t : c.terms()) {
    const Poly one_minus{1, -t.theta};
    for (int j = 0; j <= t.poly.degree(); ++j) {
      const GaussianRational pj = t.poly.coeff(j);
      if (pj.is_zero()) continue;
      g += RationalFunction(numerators[j].scale_arg(t.theta) * pj, one_minus.pow(j + 1));
    }
  }
  RationalFunction omega = g + g.reciprocal_arg() + RationalFunction(Poly::constant(1));
  for (const auto& [k, v] : c.specials()) {
    if (k == 0) continue;
    const GaussianRational delta = GaussianRational(v) - c.general(k);
    if (delta.is_zero()) continue;
    const Poly yk = Poly::monomial(1, k);
    omega += RationalFunction(yk * delta) + RationalFunction(Poly::constant(delta), yk);
  }
  auto [s, t] = symmetric_to_cos(omega);
  return {std::move(s), std::move(t), c.variance()};
}

SpectralDensity ag_to_spectral(const ArmaModel& m) {
  const Correlogram c = ag_to_correlogram(m);
  std::vector<Rational> phi{Rational(-1)};
  phi.insert(phi.end(), m.ar().begin(), m.ar().end());
  const Poly lg = symmetric_laurent_to_cos(autocorrelation_half(full_ma(m.ma())));
  const Poly lp = symmetric_laurent_to_cos(autocorrelation_half(phi));
  const Rational kappa = normalize(lg, lp);
  if (kappa != m.sigma2() / c.variance())
    throw std::logic_error("normalisation factor disagrees with sigma^2/V from the correlogram");
  return {lg * GaussianRational(kappa), lp, c.variance()};
}

std::vector<PartialFractionTerm> y_partial_fractions(const SpectralDensity& s) {
  return partial_fractions(s.y_form());
}

Correlogram spectral_to_correlogram(const SpectralDensity& s) {
  const auto pf = y_partial_fractions(s);
  std::vector<std::pair<GaussianRational, Poly>> kept;
  std::map<int, GaussianRational> deltas;
  for (const auto& t : pf) {
    if (!t.is_pole()) {
      if (t.m >= 0) deltas[t.m] += t.c;
      continue;
    }
    const Rational n = t.lambda.norm();
    if (n == Rational(1)) throw DenominatorZero("omega(y) has a pole on the unit circle at y = " + t.lambda.str());
    if (n > Rational(1)) continue;
    const Poly contrib = binomial_poly(t.ell) * (t.c * t.lambda.pow(-t.ell));
    auto it = std::find_if(kept.begin(), kept.end(), [&](const auto& e) { return e.first == t.lambda; });
    if (it == kept.end()) kept.emplace_back(t.lambda, contrib);
    else it->second += contrib;
  }

  std::vector<CorrelogramTerm> terms;
  for (auto& [lambda, poly] : kept) terms.push_back({lambda, std::move(poly)});
  const int valid_from = s.q() - s.p() + 1;
  auto general = [&](long k) {
    GaussianRational acc;
    for (const auto& t : terms) acc += t.poly.eval(GaussianRational(Rational(k))) * t.theta.pow(k);
    return acc;
  };
  for (const auto& [m, c] : deltas)
    if (m >= std::max(valid_from, 1)) throw std::logic_error("delta term beyond the exceptional range");

  const GaussianRational rho0 = general(0) + deltas[0];
  if (rho0 != GaussianRational(1))
    throw NormalizationViolated("rho_0 recovered from the density is " + rho0.str() + ", not 1");

  std::map<int, Rational> specials;
  for (int k = 0; k < valid_from; ++k) {
    const GaussianRational v = general(k) + deltas[k];
    if (!v.is_real()) throw std::logic_error("exceptional autocorrelation came out complex");
    specials.emplace(k, v.re());
  }
  return {std::move(terms), std::move(specials), valid_from, s.variance()};
}

std::vector<ArmaModel> spectral_to_ag(const SpectralDensity& s, const MaSelection& sel) {
  std::vector<GaussianRational> ar_y;
  if (s.p() > 0) {
    for (const auto& r : roots_exact(s.denominator())) {
      const auto [small, large] = reciprocal_pair(r.root);
      if (small.norm() == Rational(1))
        throw DenominatorZero("spectral denominator vanishes at cos(beta) = " + r.root.str());
      for (int i = 0; i < r.multiplicity; ++i) ar_y.push_back(small);
    }
  }
  const std::vector<Rational> alphas = alphas_from_roots(ar_y);
  const Rational avg = exact_average(s.numerator(), s.denominator());
  if (avg != Rational(1)) throw NormalizationViolated("density averages " + avg.str() + " over [0, pi], not 1");

  // One (small, large) pair per MA root, with multiplicity.
  std::vector<std::pair<GaussianRational, GaussianRational>> pairs;
  if (s.q() > 0) {
    for (const auto& r : roots_exact(s.numerator())) {
      auto pr = reciprocal_pair(r.root);
      for (int i = 0; i < r.multiplicity; ++i) {
        pairs.push_back(pr);
        // Unit-circle roots alternate between y and its conjugate.
        if (pr.first.norm() == Rational(1)) std::swap(pr.first, pr.second);
      }
    }
  }

  std::vector<std::vector<GaussianRational>> selections;
  switch (sel.policy) {
    case MaPolicy::Invertible: {
      std::vector<GaussianRational> ys;
      for (const auto& pr : pairs) ys.push_back(pr.first);
      selections.push_back(std::move(ys));
      break;
    }
    case MaPolicy::EnumerateAll: {
      if (pairs.size() > 20) throw std::invalid_argument("too many MA roots to enumerate");
      for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
        std::vector<GaussianRational> ys;
        for (std::size_t i = 0; i < pairs.size(); ++i) ys.push_back((mask >> i) & 1U ? pairs[i].second : pairs[i].first);
        selections.push_back(std::move(ys));
      }
      break;
    }
    case MaPolicy::AsGiven: {
      std::vector<GaussianRational> thetas;
      std::vector<GaussianRational> expected;
      for (const auto& y : sel.chosen_y) {
        if (y.is_zero()) throw ValidationError("a chosen MA root cannot be zero");
        thetas.push_back((y + y.inverse()) * GaussianRational(Rational(1, 2)));
      }
      for (const auto& pr : pairs) expected.push_back((pr.first + pr.second) * GaussianRational(Rational(1, 2)));
      auto less = [](const GaussianRational& a, const GaussianRational& b) { return canonical_less(a, b); };
      std::sort(thetas.begin(), thetas.end(), less);
      std::sort(expected.begin(), expected.end(), less);
      if (thetas != expected) throw ValidationError("chosen MA roots do not match the spectral numerator");
      selections.push_back(sel.chosen_y);
      break;
    }
  }

  std::vector<ArmaModel> out;
  for (const auto& ys : selections) {
    if (!conjugate_closed(ys)) continue;
    std::vector<Rational> gammas = gammas_from_roots(ys);
    if (gammas.size() != ys.size()) continue;
    const Rational sigma2 = recover_sigma2(s, alphas, gammas);
    out.emplace_back(alphas, std::move(gammas), sigma2);
  }
  if (out.empty()) throw IllegitimateSpectrum("no MA root selection yields real coefficients");
  std::sort(out.begin(), out.end(), model_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ArmaModel> correlogram_to_ag(const Correlogram& c) {
  std::vector<GaussianRational> ys;
  for (const auto& t : c.terms())
    for (int i = 0; i <= t.poly.degree(); ++i) ys.push_back(t.theta);
  const std::vector<Rational> alphas = alphas_from_roots(ys);

  std::vector<ArmaModel> out;
  for (auto& m : spectral_to_ag(correlogram_to_spectral(c), {MaPolicy::EnumerateAll, {}})) {
    if (m.ar() != alphas) throw std::logic_error("AR part from the density disagrees with the correlogram bases");
    if (verify_gamma_equations(m, c)) out.push_back(std::move(m));
  }
  return out;
}

bool verify_gamma_equations(std::span<const Rational> alphas, std::span<const Rational> gammas,
                            const Correlogram& c) {
  const int p = static_cast<int>(alphas.size());
  const int q = static_cast<int>(gammas.size());
  if (c.valid_from() != q - p + 1) return false;
  ArCorrelogram a;
  try {
    a = ar_correlogram(alphas, Rational(1));
  } catch (const NotStationary&) {
    return false;
  }
  const std::vector<Rational> g = full_ma(gammas);
  const Rational d0 = ma_energy(a, g);

  std::set<std::size_t> matched;
  for (const auto& t : a.terms) {
    const Poly lhs = pushed_poly(t, g);
    const auto it = std::find_if(c.terms().begin(), c.terms().end(),
                                 [&](const CorrelogramTerm& ct) { return ct.theta == t.lambda; });
    const Poly rhs = it == c.terms().end() ? Poly() : it->poly * GaussianRational(d0);
    if (lhs != rhs) return false;
    if (it != c.terms().end()) matched.insert(static_cast<std::size_t>(it - c.terms().begin()));
  }
  if (matched.size() != c.terms().size()) return false;

  for (const auto& [k, v] : c.specials()) {
    Rational acc;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        acc += g[i] * g[j] * ar_rho_sym(a, k + static_cast<long>(i) - static_cast<long>(j));
    if (acc != v * d0) return false;
  }
  return true;
}

bool verify_gamma_equations(const ArmaModel& m, const Correlogram& c) {
  return verify_gamma_equations(m.ar(), m.ma(), c);
}

}  // namespace armatri
