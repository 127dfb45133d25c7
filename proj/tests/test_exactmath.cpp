#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "armatri/errors.hpp"
#include "armatri/partial_fractions.hpp"
#include "armatri/roots.hpp"
#include "armatri/spectral.hpp"
#include "armatri/trig.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace armatri;
using fixtures::R;

namespace {

GaussianRational G(const char* re, const char* im = "0") { return {R(re), R(im)}; }

bool has_term(const std::vector<PartialFractionTerm>& terms, const GaussianRational& c, const GaussianRational& lambda,
              int ell) {
  return std::any_of(terms.begin(), terms.end(), [&](const PartialFractionTerm& t) {
    return t.is_pole() && t.c == c && t.lambda == lambda && t.ell == ell;
  });
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(R("6/8").str() == "3/4");
  CHECK(R("-2/-4").str() == "1/2");
  CHECK((R("1/6") + R("1/3")).str() == "1/2");
  CHECK((R("2/3") * R("3/2")) == Rational(1));
  CHECK(R("0.25") == R("1/4"));
  CHECK(R("-1.5e-2") == R("-3/200"));
  CHECK(R("1e3") == Rational(1000));
  CHECK(R("7").is_integer());
  CHECK(R("1/3").decimal(6) == "0.333333");
  CHECK(R("4/9").sqrt() == R("2/3"));
  CHECK_FALSE(R("2").sqrt().has_value());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
  CHECK(R("1/3") < R("1/2"));
}

TEST_CASE("gaussian rational field operations") {
  const GaussianRational z = G("1/2", "1/3");
  const GaussianRational w = G("-2", "5/4");
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(z.conj().conj() == z);
  CHECK((z / w) * w == z);
  CHECK(z.norm() == R("13/36"));
  CHECK(z.pow(-2) * z.pow(2) == GaussianRational(1));
  CHECK(GaussianRational::i().pow(2) == GaussianRational(-1));
  CHECK(G("41/100", "38/100").str() == "41/100+19/50*i");
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const GaussianRational z(Rational(num(gen), den(gen)), Rational(num(gen), den(gen)));
    const GaussianRational w(Rational(num(gen), den(gen)), Rational(num(gen), den(gen)));
    CHECK((z * w).norm() == z.norm() * w.norm());
  }
}

TEST_CASE("sqrt_exact examples") {
  CHECK(sqrt_exact(GaussianRational(-16)) == G("0", "4"));
  CHECK(sqrt_exact(GaussianRational(0)) == GaussianRational(0));
  CHECK_FALSE(sqrt_exact(GaussianRational(2)).has_value());
  CHECK(sqrt_exact(G("0", "2")) == G("1", "1"));
  CHECK(sqrt_exact(G("-3", "-4")) == G("1", "-2"));
  CHECK(sqrt_exact(G("9/4")) == G("3/2"));
}

TEST_CASE("sqrt_exact agrees with a brute-force enumeration of squares") {
  // Every square root of a value below has |re|, |im| <= 4 and denominator 1, 2 or 4.
  std::set<std::pair<std::string, std::string>> squares;
  for (const int d : {1, 2, 4})
    for (int a = -16; a <= 16; ++a)
      for (int b = -16; b <= 16; ++b) {
        const GaussianRational w(Rational(a, d), Rational(b, d));
        const GaussianRational s = w * w;
        squares.emplace(s.re().str(), s.im().str());
      }
  int found = 0;
  for (const int d : {1, 2, 4})
    for (int a = -8; a <= 8; ++a)
      for (int b = -8; b <= 8; ++b) {
        const GaussianRational z(Rational(a, d), Rational(b, d));
        const auto r = sqrt_exact(z);
        const bool expected = squares.contains({z.re().str(), z.im().str()});
        CHECK(r.has_value() == expected);
        if (r) {
          ++found;
          CHECK(*r * *r == z);
          CHECK((r->re().sign() > 0 || (r->re().is_zero() && r->im().sign() >= 0)));
        }
      }
  CHECK(found > 20);
}

TEST_CASE("polynomial basics") {
  const std::vector<GaussianRational> ex1_roots{G("2/3"), G("3/4"), G("4/5")};
  const Poly p = poly_from_roots(ex1_roots);
  CHECK(p == Poly{G("-2/5"), G("49/30"), G("-133/60"), 1});
  const std::vector<GaussianRational> pair{G("1", "-1"), G("1", "1")};
  CHECK(poly_from_roots(pair) == Poly{2, -2, 1});
  CHECK(poly_from_roots(std::vector<GaussianRational>{}) == Poly::constant(1));

  const Poly a{1, 2, 1};
  const Poly b{1, 1};
  CHECK(a.exact_div(b) == b);
  const auto [quot, rem] = Poly{1, 0, 0, 1}.divmod(Poly{-1, 1});
  CHECK(quot == Poly{1, 1, 1});
  CHECK(rem == Poly::constant(2));
  CHECK(gcd(a, Poly{-1, 0, 1}) == b);
  CHECK(Poly{1, 2, 3}.shift(1) == Poly{6, 8, 3});
  CHECK(Poly{1, 2, 3}.eval(GaussianRational(2)) == GaussianRational(17));
  CHECK(Poly{0, 0}.is_zero());
  CHECK(Poly{0, 0}.degree() == -1);
}

TEST_CASE("roots_exact examples") {
  const auto r1 = roots_exact(Poly{5, -4, 1});
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == RootMultiplicity{G("2", "-1"), 1});
  CHECK(r1[1] == RootMultiplicity{G("2", "1"), 1});

  const auto r2 = roots_exact(Poly{G("-1/8"), G("3/4"), G("-3/2"), 1});
  REQUIRE(r2.size() == 1);
  CHECK(r2[0] == RootMultiplicity{G("1/2"), 3});

  const auto r3 = roots_exact(Poly{-1, 1});
  REQUIRE(r3.size() == 1);
  CHECK(r3[0] == RootMultiplicity{G("1"), 1});

  CHECK(roots_exact(Poly{0, 0, 1}) == std::vector<RootMultiplicity>{{GaussianRational(0), 2}});
  CHECK_THROWS_AS(roots_exact(Poly{-2, 0, 1}), RootsNotExpressible);
  CHECK_THROWS_AS(roots_exact(Poly{-2, 0, 0, 1}), RootsNotExpressible);
  CHECK_THROWS_AS(roots_exact(Poly::constant(3)), std::invalid_argument);
}

TEST_CASE("roots_exact recovers random Gaussian-rational factorisations") {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> deg(1, 6);
  auto less = [](const GaussianRational& a, const GaussianRational& b) { return canonical_less(a, b); };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<GaussianRational> roots;
    const int n = deg(gen);
    while (static_cast<int>(roots.size()) < n) {
      if (!roots.empty() && num(gen) > 6) {
        roots.push_back(roots.back());
        continue;
      }
      roots.emplace_back(Rational(num(gen), den(gen)), trial % 3 == 0 ? Rational(0) : Rational(num(gen), den(gen)));
    }
    const int sn = num(gen);
    const GaussianRational scale(Rational(sn == 0 ? 3 : sn, den(gen)), Rational(trial % 2));
    const Poly p = poly_from_roots(roots) * scale;
    const auto got = flatten_roots(roots_exact(p));
    std::sort(roots.begin(), roots.end(), less);
    CHECK(got == roots);
  }
}

TEST_CASE("squarefree decomposition") {
  const Poly p = Poly{-1, 1}.pow(3) * Poly{2, 1};
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Poly{2, 1});
  CHECK(parts[1] == Poly::constant(1));
  CHECK(parts[2] == Poly{-1, 1});
}

TEST_CASE("partial fractions of a two-pole function") {
  const RationalFunction f(Poly::constant(1), Poly{0, -1, 1});
  const auto terms = partial_fractions(f);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0] == PartialFractionTerm::power(-1, -1));
  CHECK(terms[1] == PartialFractionTerm::pole(1, 1, 1));
  CHECK(recombine(terms) == f);
}

TEST_CASE("partial fractions of the example densities") {
  // omega(y) for the first example: (2016/113) (8 - 12c + 5c^2) / (13325 - 38092c + 36288c^2 - 11520c^3).
  const Rational k = R("2016/113");
  const SpectralDensity s1(Poly{8, -12, 5} * GaussianRational(k), Poly{13325, -38092, 36288, -11520}, R("113/14"));
  const auto t1 = partial_fractions(s1.y_form());
  CHECK(t1.size() == 6);
  CHECK(std::all_of(t1.begin(), t1.end(), [](const PartialFractionTerm& t) { return t.is_pole() && t.ell == 1; }));
  CHECK(has_term(t1, G("610/113"), G("4/5"), 1));
  CHECK(has_term(t1, G("-7625/904"), G("5/4"), 1));
  CHECK(has_term(t1, G("-4797/904"), G("3/4"), 1));
  CHECK(has_term(t1, G("100/113"), G("2/3"), 1));
  CHECK(recombine(t1) == s1.y_form());

  const SpectralDensity s3(Poly{5, -12, 8} * GaussianRational(R("81/11")), Poly{5, -4}.pow(3), R("176/2025"));
  const auto t3 = partial_fractions(s3.y_form());
  CHECK(t3.size() == 6);
  CHECK(has_term(t3, G("31/44"), G("1/2"), 1));
  CHECK(has_term(t3, G("12/44"), G("1/2"), 2));
  CHECK(has_term(t3, G("15/176"), G("1/2"), 3));
  CHECK(has_term(t3, G("-28/11"), G("2"), 1));
  CHECK(has_term(t3, G("-42/11"), G("2"), 2));
  CHECK(has_term(t3, G("-60/11"), G("2"), 3));
}

TEST_CASE("partial fractions recombine to the input") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 7);
  std::uniform_int_distribution<int> deg(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<GaussianRational> poles;
    const int n = deg(gen) + 1;
    while (static_cast<int>(poles.size()) < n) {
      if (!poles.empty() && num(gen) > 4) {
        poles.push_back(poles.back());
        continue;
      }
      poles.emplace_back(Rational(num(gen), den(gen)), Rational(num(gen), den(gen)));
    }
    std::vector<GaussianRational> nc;
    for (int i = 0, m = deg(gen) + 2; i < m; ++i) nc.emplace_back(Rational(num(gen), den(gen)), Rational(num(gen), den(gen)));
    const RationalFunction f(Poly(nc), poly_from_roots(poles));
    const auto terms = partial_fractions(f);
    CHECK(recombine(terms) == f);
    for (const auto& t : terms)
      if (t.is_pole()) CHECK_FALSE(t.lambda.is_zero());
  }
}

TEST_CASE("chebyshev and cosine rewriting") {
  CHECK(chebyshev_t(0) == Poly::constant(1));
  CHECK(chebyshev_t(3) == Poly{0, -3, 0, 4});
  // 1 + 2 * (1/2) cos(beta) as a symmetric Laurent polynomial.
  CHECK(symmetric_laurent_to_cos({1, R("1/2")}) == Poly{1, 1});
  const std::vector<Rational> a{1, -4, 5};
  CHECK(symmetric_laurent_to_cos(autocorrelation_half(a)) == Poly{32, -48, 20});

  const Poly s{8, -12, 5};
  const Poly t{13325, -38092, 36288, -11520};
  const RationalFunction y = cos_ratio_to_y(s, t);
  const auto [s2, t2] = symmetric_to_cos(y);
  CHECK(RationalFunction(s2, t2) == RationalFunction(s, t));
  CHECK_THROWS_AS(symmetric_to_cos(RationalFunction(Poly{0, 1})), std::invalid_argument);
}
