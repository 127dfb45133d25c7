#include "armatri/correlogram.hpp"

#include "armatri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace armatri {

Correlogram::Correlogram(std::vector<CorrelogramTerm> terms, std::map<int, Rational> specials, int valid_from,
                         Rational variance)
    : specials_(std::move(specials)), valid_from_(valid_from), variance_(std::move(variance)) {
  for (auto& t : terms) {
    if (t.poly.is_zero()) continue;
    const Rational n = t.theta.norm();
    if (n.is_zero() || n >= Rational(1))
      throw ValidationError("correlogram base " + t.theta.str() + " must satisfy 0 < |theta| < 1");
    if (t.theta.is_real() && !t.poly.is_real())
      throw ValidationError("real base " + t.theta.str() + " carries a non-real polynomial");
    terms_.push_back(std::move(t));
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const CorrelogramTerm& a, const CorrelogramTerm& b) { return canonical_less(a.theta, b.theta); });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].theta == terms_[i - 1].theta)
      throw ValidationError("duplicate correlogram base " + terms_[i].theta.str());
  for (const auto& t : terms_) {
    if (t.theta.is_real()) continue;
    const GaussianRational partner = t.theta.conj();
    const auto it = std::find_if(terms_.begin(), terms_.end(),
                                 [&](const CorrelogramTerm& o) { return o.theta == partner; });
    if (it == terms_.end() || it->poly != t.poly.conj())
      throw ValidationError("complex base " + t.theta.str() + " lacks its complex-conjugate partner");
  }

  if (valid_from_ > 0 && !specials_.contains(0)) specials_.emplace(0, Rational(1));
  for (const auto& [k, v] : specials_)
    if (k < 0 || k >= valid_from_)
      throw ValidationError("exceptional value rho_" + std::to_string(k) + " lies outside 0.." +
                            std::to_string(valid_from_ - 1));
  for (int k = 0; k < valid_from_; ++k)
    if (!specials_.contains(k)) throw ValidationError("missing exceptional value rho_" + std::to_string(k));
  if (rho(*this, 0) != GaussianRational(1)) throw ValidationError("rho_0 must equal 1");
  if (variance_.sign() <= 0) throw ValidationError("variance must be positive");
}

int Correlogram::p() const {
  int n = 0;
  for (const auto& t : terms_) n += t.poly.degree() + 1;
  return n;
}

GaussianRational Correlogram::general(long k) const {
  GaussianRational acc;
  const GaussianRational kk{Rational(k)};
  for (const auto& t : terms_) acc += t.poly.eval(kk) * t.theta.pow(k);
  return acc;
}

GaussianRational rho(const Correlogram& c, long k) {
  if (k < 0) k = -k;
  if (k < c.valid_from()) return c.specials().at(static_cast<int>(k));
  return c.general(k);
}

RealCorrelogramForm to_real_form(const Correlogram& c) {
  RealCorrelogramForm r;
  for (const auto& t : c.terms()) {
    if (t.theta.is_real()) {
      r.real_terms.push_back({t.theta.re(), t.poly.real_coeffs()});
    } else if (t.theta.im().sign() > 0) {
      TrigTerm trig;
      trig.root = t.theta;
      for (const auto& a : t.poly.coeffs()) {
        trig.cos_poly.push_back(Rational(2) * a.re());
        trig.sin_poly.push_back(Rational(-2) * a.im());
      }
      r.trig_terms.push_back(std::move(trig));
    }
  }
  return r;
}

Correlogram from_real_form(const RealCorrelogramForm& r, std::map<int, Rational> specials, int valid_from,
                           Rational variance) {
  std::vector<CorrelogramTerm> terms;
  for (const auto& t : r.real_terms) terms.push_back({GaussianRational(t.theta), Poly::from_rationals(t.poly)});
  for (const auto& t : r.trig_terms) {
    if (t.root.im().sign() <= 0) throw ValidationError("trigonometric term root must have positive imaginary part");
    const std::size_t n = std::max(t.sin_poly.size(), t.cos_poly.size());
    std::vector<GaussianRational> coeffs(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational rc = i < t.cos_poly.size() ? t.cos_poly[i] : Rational(0);
      const Rational qc = i < t.sin_poly.size() ? t.sin_poly[i] : Rational(0);
      coeffs[i] = GaussianRational(rc / Rational(2), -qc / Rational(2));
    }
    Poly p(std::move(coeffs));
    if (p.is_zero()) continue;
    terms.push_back({t.root.conj(), p.conj()});
    terms.push_back({t.root, std::move(p)});
  }
  return {std::move(terms), std::move(specials), valid_from, std::move(variance)};
}

double eval_real_form(const RealCorrelogramForm& r, long k) {
  auto eval_poly = [k](const std::vector<Rational>& p) {
    double acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * static_cast<double>(k) + it->to_double();
    return acc;
  };
  double acc = 0;
  for (const auto& t : r.real_terms) acc += eval_poly(t.poly) * std::pow(t.theta.to_double(), static_cast<double>(k));
  for (const auto& t : r.trig_terms) {
    const std::complex<double> z = t.root.to_complex();
    const double a = std::arg(z) * static_cast<double>(k);
    acc += std::pow(std::abs(z), static_cast<double>(k)) * (eval_poly(t.sin_poly) * std::sin(a) + eval_poly(t.cos_poly) * std::cos(a));
  }
  return acc;
}

std::string angle_string(const GaussianRational& z) {
  const Rational& x = z.re();
  const Rational& y = z.im();
  if (y.is_zero()) return x.sign() >= 0 ? "0" : "pi";
  const std::string sign = y.sign() < 0 ? "-" : "";
  const Rational ay = y.abs();
  if (x.is_zero()) return sign + "pi/2";
  if (x == ay) return sign + "pi/4";
  if (x == -ay) return sign + "3*pi/4";
  const Rational ratio = ay / x.abs();
  if (x.sign() > 0) return sign + "atan(" + ratio.str() + ")";
  return sign + "(pi - atan(" + ratio.str() + "))";
}

std::string modulus_string(const GaussianRational& z) {
  const Rational n = z.norm();
  if (auto r = n.sqrt()) return r->str();
  auto part = [](const mpz_class& v) {
    if (auto s = isqrt_exact(v)) return s->get_str();
    return "sqrt(" + v.get_str() + ")";
  };
  if (n.is_integer()) return part(n.num());
  return part(n.num()) + "/" + part(n.den());
}

std::string to_string(const RealCorrelogramForm& r) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  for (const auto& t : r.real_terms) {
    sep();
    os << "(" << Poly::from_rationals(t.poly).str("k") << ")*(" << t.theta.str() << ")^k";
  }
  for (const auto& t : r.trig_terms) {
    sep();
    const std::string a = angle_string(t.root);
    os << "(" << modulus_string(t.root) << ")^k*((" << Poly::from_rationals(t.sin_poly).str("k") << ")*sin(" << a
       << "*k) + (" << Poly::from_rationals(t.cos_poly).str("k") << ")*cos(" << a << "*k))";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace armatri
