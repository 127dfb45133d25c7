#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "armatri/convert.hpp"
#include "armatri/correlogram.hpp"
#include "armatri/errors.hpp"

#include "fixtures.hpp"

#include <cmath>

using namespace armatri;
using fixtures::R;

namespace {

GaussianRational G(const char* re, const char* im = "0") { return {R(re), R(im)}; }

Correlogram ex1_correlogram() {
  return {{{G("4/5"), Poly{G("1525/226")}}, {G("3/4"), Poly{G("-1599/226")}}, {G("2/3"), Poly{G("300/226")}}},
          {},
          0,
          R("113/14")};
}

Correlogram ex2_correlogram() {
  return {{{G("1/2", "1/2"), Poly{G("41/100", "-38/100")}}, {G("1/2", "-1/2"), Poly{G("41/100", "38/100")}}},
          {{0, 1}, {1, R("81/100")}},
          2,
          1};
}

Correlogram ex3_correlogram() {
  return {{{G("1/2"), Poly{1, G("3/44"), G("15/44")}}}, {}, 0, R("176/2025")};
}

}  // namespace

TEST_CASE("rho at small lags") {
  CHECK(rho(ex1_correlogram(), 0) == GaussianRational(1));
  CHECK(rho(ex2_correlogram(), 0) == GaussianRational(1));
  CHECK(rho(ex2_correlogram(), 1) == G("81/100"));
  // Direct evaluation of (1 + 3/44 k + 15/44 k^2) / 2^k at k = 1.
  const Rational direct = (Rational(1) + R("3/44") + R("15/44")) / Rational(2);
  CHECK(rho(ex3_correlogram(), 1) == GaussianRational(direct));
  CHECK(rho(ex3_correlogram(), 1) == G("31/44"));
  CHECK(rho(ex3_correlogram(), 2) == G("110/176"));
  CHECK(rho(ex3_correlogram(), -2) == rho(ex3_correlogram(), 2));
}

TEST_CASE("orders implied by a correlogram") {
  CHECK(ex1_correlogram().p() == 3);
  CHECK(ex1_correlogram().q() == 2);
  CHECK(ex2_correlogram().p() == 2);
  CHECK(ex2_correlogram().q() == 3);
  CHECK(ex3_correlogram().p() == 3);
}

TEST_CASE("invariants are enforced") {
  CHECK_THROWS_AS(Correlogram({{G("1/2", "1/2"), Poly{1}}}, {}, 0, 1), ValidationError);
  CHECK_THROWS_AS(Correlogram({{G("1"), Poly{1}}}, {}, 0, 1), ValidationError);
  CHECK_THROWS_AS(Correlogram({{G("1/2"), Poly{G("1/2")}}}, {}, 0, 1), ValidationError);
  CHECK_THROWS_AS(Correlogram({{G("1/2"), Poly{1}}}, {{0, 1}, {3, 0}}, 2, 1), ValidationError);
  CHECK_THROWS_AS(Correlogram({{G("1/2"), Poly{1}}}, {}, 0, 0), ValidationError);
  CHECK_THROWS_AS(Correlogram({{G("1/2"), Poly{1}}, {G("1/2"), Poly{2}}}, {}, 0, 1), ValidationError);
  // A missing rho_0 special is filled with 1.
  const Correlogram c({{G("1/2"), Poly{G("1/4")}}}, {{1, R("1/2")}}, 2, 1);
  CHECK(c.specials().at(0) == Rational(1));
}

TEST_CASE("pure moving average correlogram") {
  const Correlogram c({}, {{0, 1}, {1, R("2/5")}}, 2, R("5/4"));
  CHECK(c.p() == 0);
  CHECK(rho(c, 1) == G("2/5"));
  CHECK(rho(c, 2) == GaussianRational(0));
  CHECK(rho(c, 50) == GaussianRational(0));
}

TEST_CASE("real trigonometric form") {
  const RealCorrelogramForm r = to_real_form(ex2_correlogram());
  CHECK(r.real_terms.empty());
  REQUIRE(r.trig_terms.size() == 1);
  CHECK(r.trig_terms[0].root == G("1/2", "1/2"));
  CHECK(r.trig_terms[0].sin_poly == std::vector<Rational>{R("38/50")});
  CHECK(r.trig_terms[0].cos_poly == std::vector<Rational>{R("41/50")});
  CHECK(to_string(r) == "(1/sqrt(2))^k*((19/25)*sin(pi/4*k) + (41/50)*cos(pi/4*k))");
  CHECK(angle_string(G("1/2", "1/2")) == "pi/4");
  CHECK(modulus_string(G("1/2", "1/2")) == "1/sqrt(2)");

  const RealCorrelogramForm r1 = to_real_form(ex1_correlogram());
  CHECK(r1.trig_terms.empty());
  CHECK(r1.real_terms.size() == 3);

  const Correlogram back = from_real_form(r, ex2_correlogram().specials(), 2, 1);
  CHECK(back == ex2_correlogram());

  const Correlogram zero({{G("1/2", "1/2"), Poly()}, {G("1/2", "-1/2"), Poly()}}, {}, 1, 1);
  CHECK(to_real_form(zero) == RealCorrelogramForm{});
  CHECK(from_real_form(RealCorrelogramForm{}, {}, 1, 1).terms().empty());
}

TEST_CASE("real form evaluates to the complex form") {
  fixtures::ModelGenerator gen(5);
  for (int i = 0; i < 60; ++i) {
    const Correlogram c = ag_to_correlogram(gen.next());
    const RealCorrelogramForm r = to_real_form(c);
    CHECK(from_real_form(r, c.specials(), c.valid_from(), c.variance()) == c);
    for (long k = std::max(0, c.valid_from()); k < 30; ++k)
      CHECK(eval_real_form(r, k) == doctest::Approx(rho(c, k).re().to_double()).epsilon(1e-12));
  }
}

TEST_CASE("autocorrelations are bounded by one") {
  fixtures::ModelGenerator gen(17);
  std::vector<Correlogram> all{ex1_correlogram(), ex2_correlogram(), ex3_correlogram()};
  for (int i = 0; i < 40; ++i) all.push_back(ag_to_correlogram(gen.next()));
  for (const auto& c : all)
    for (long k = 0; k <= 200; ++k) {
      const GaussianRational v = rho(c, k);
      CHECK(v.is_real());
      CHECK(v.re().abs() <= Rational(1));
    }
}
