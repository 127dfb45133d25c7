#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "armatri/errors.hpp"
#include "armatri/model.hpp"

#include "fixtures.hpp"

using namespace armatri;
using fixtures::R;
using fixtures::Rs;

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(fixtures::ex1()) == Poly{R("-2/5"), R("49/30"), R("-133/60"), 1});
  CHECK(char_poly(fixtures::ex2()) == Poly{R("1/2"), -1, 1});
  CHECK(char_poly(std::vector<Rational>{}) == Poly::constant(1));
  CHECK(ma_poly(fixtures::ex1()) == Poly{5, -4, 1});
  CHECK(ma_poly(fixtures::ex2()) == Poly{1, 3, 3, 1});
  CHECK(ma_poly(std::vector<Rational>{}) == Poly::constant(1));
}

TEST_CASE("validate the examples") {
  const ValidationReport r = validate(fixtures::ex1());
  CHECK(r.ok());
  CHECK(flatten_roots(r.ar_roots) == std::vector<GaussianRational>{R("2/3"), R("3/4"), R("4/5")});
  REQUIRE(r.ma_roots.has_value());
  CHECK(r.ma_roots->size() == 2);

  const ValidationReport r2 = validate(fixtures::ex2());
  CHECK(r2.ok());
  REQUIRE(r2.ma_roots.has_value());
  CHECK(*r2.ma_roots == std::vector<RootMultiplicity>{{GaussianRational(-1), 3}});

  const ValidationReport r3 = validate(fixtures::ex3());
  CHECK(r3.ok());
  CHECK(r3.ar_roots == std::vector<RootMultiplicity>{{R("1/2"), 3}});
}

TEST_CASE("non-stationary and non-coprime models") {
  const ArmaModel explosive(Rs({"3/2"}), {}, 1);
  CHECK_FALSE(validate(explosive).stationary);
  CHECK_THROWS_AS(require_valid(explosive), NotStationary);

  const ArmaModel unit_root(Rs({"1"}), {}, 1);
  CHECK_FALSE(validate(unit_root).stationary);

  // AR root 1/2 and MA root 1/2.
  const ArmaModel shared(Rs({"1/2"}), Rs({"-1/2"}), 1);
  const ValidationReport r = validate(shared);
  CHECK(r.stationary);
  CHECK_FALSE(r.coprime);
  CHECK_THROWS_AS(require_valid(shared), ValidationError);
}

TEST_CASE("construction rejects ambiguous orders and bad scales") {
  CHECK_THROWS_AS(ArmaModel(Rs({"1/2", "0"}), {}, 1), ValidationError);
  CHECK_THROWS_AS(ArmaModel({}, Rs({"1", "0"}), 1), ValidationError);
  CHECK_THROWS_AS(ArmaModel({}, {}, 0), ValidationError);
  CHECK_THROWS_AS(ArmaModel::with_sigma({}, {}, R("-1")), ValidationError);
  const ArmaModel m = fixtures::ex1();
  CHECK(m.p() == 3);
  CHECK(m.q() == 2);
  CHECK(m.sigma2() == R("1/100"));
  CHECK(m.sigma() == R("1/10"));
  CHECK_FALSE(ArmaModel({}, {}, 2).sigma().has_value());
}

TEST_CASE("characteristic polynomials vanish at the reported roots") {
  fixtures::ModelGenerator gen(11);
  for (int i = 0; i < 100; ++i) {
    const ArmaModel m = gen.next();
    const ValidationReport r = validate(m);
    CHECK(r.stationary);
    for (const auto& root : r.ar_roots) CHECK(char_poly(m).eval(root.root).is_zero());
    if (r.ma_roots)
      for (const auto& root : *r.ma_roots) CHECK(ma_poly(m).eval(root.root).is_zero());
  }
}
