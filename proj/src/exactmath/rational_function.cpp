#include "armatri/rational_function.hpp"

#include <stdexcept>

namespace armatri {

RationalFunction::RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.exact_div(g);
    den_ = den_.exact_div(g);
  }
  const GaussianRational lead = den_.leading();
  if (lead != GaussianRational(1)) {
    const GaussianRational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

GaussianRational RationalFunction::eval(const GaussianRational& x) const {
  const GaussianRational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

std::complex<long double> RationalFunction::eval(std::complex<long double> x) const {
  return num_.eval(x) / den_.eval(x);
}

RationalFunction RationalFunction::reciprocal_arg() const {
  // n(1/x)/d(1/x) = x^(dd - dn) * rev(n)/rev(d)
  const int dn = num_.degree();
  const int dd = den_.degree();
  if (num_.is_zero()) return *this;
  Poly n = num_.reversed(dn);
  Poly d = den_.reversed(dd);
  if (dd >= dn) n *= Poly::monomial(1, dd - dn);
  else d *= Poly::monomial(1, dn - dd);
  return {std::move(n), std::move(d)};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
  }
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by the zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

}  // namespace armatri
