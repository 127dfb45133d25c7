#include "armatri/json_io.hpp"

#include "armatri/errors.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace armatri {
namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing member \"") + key + "\"");
  return j.at(key);
}

std::vector<Rational> rational_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

Json rational_list_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.is_real() ? to_json(c.re()) : to_json(c));
  return a;
}

Poly poly_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<GaussianRational> c;
  for (const auto& v : j) c.push_back(gaussian_from_json(v));
  return Poly(std::move(c));
}

ArmaModel model_from_json(const Json& j) {
  std::vector<Rational> ar = j.contains("ar") ? rational_list(j.at("ar"), "ar") : std::vector<Rational>{};
  std::vector<Rational> ma = j.contains("ma") ? rational_list(j.at("ma"), "ma") : std::vector<Rational>{};
  if (j.contains("sigma2")) return {std::move(ar), std::move(ma), rational_from_json(j.at("sigma2"))};
  return ArmaModel::with_sigma(std::move(ar), std::move(ma), rational_from_json(member(j, "sigma")));
}

}  // namespace

std::string form_name(const Form& f) {
  switch (f.index()) {
    case 0: return "ag";
    case 1: return "correlogram";
    case 2: return "spectral";
    default: return "ag_set";
  }
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const GaussianRational& z) { return Json{{"re", z.re().str()}, {"im", z.im().str()}}; }

Json to_json(const ArmaModel& m) {
  Json j{{"form", "ag"}, {"ar", rational_list_json(m.ar())}, {"ma", rational_list_json(m.ma())}};
  if (const auto s = m.sigma()) j["sigma"] = to_json(*s);
  j["sigma2"] = to_json(m.sigma2());
  return j;
}

Json to_json(const Correlogram& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms()) terms.push_back(Json{{"theta", to_json(t.theta)}, {"poly", poly_json(t.poly)}});
  Json specials = Json::object();
  for (const auto& [k, v] : c.specials()) specials[std::to_string(k)] = to_json(v);
  return Json{{"form", "correlogram"},
              {"terms", terms},
              {"specials", specials},
              {"valid_from", c.valid_from()},
              {"variance", to_json(c.variance())}};
}

Json to_json(const SpectralDensity& s) {
  return Json{{"form", "spectral"},
              {"numerator", poly_json(s.numerator())},
              {"denominator", poly_json(s.denominator())},
              {"variance", to_json(s.variance())}};
}

Json to_json(const std::vector<ArmaModel>& models) {
  Json a = Json::array();
  for (const auto& m : models) a.push_back(to_json(m));
  return Json{{"form", "ag_set"}, {"models", a}};
}

Json to_json(const Form& f) {
  return std::visit([](const auto& v) { return to_json(v); }, f);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational as a string or integer, got " + j.dump());
}

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_object()) {
    const Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
    const Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
    return {re, im};
  }
  return rational_from_json(j);
}

Form form_from_json(const Json& j) {
  const Json& tag = member(j, "form");
  if (!tag.is_string()) throw ParseError("\"form\" must be a string");
  const std::string form = tag.get<std::string>();
  if (form == "ag") return model_from_json(j);
  if (form == "ag_set") {
    const Json& models = member(j, "models");
    if (!models.is_array()) throw ParseError("\"models\" must be an array");
    std::vector<ArmaModel> out;
    for (const auto& m : models) out.push_back(model_from_json(m));
    return out;
  }
  if (form == "spectral") {
    return SpectralDensity(poly_from_json(member(j, "numerator"), "numerator"),
                           poly_from_json(member(j, "denominator"), "denominator"),
                           rational_from_json(member(j, "variance")));
  }
  if (form == "correlogram") {
    std::vector<CorrelogramTerm> terms;
    const Json& tj = member(j, "terms");
    if (!tj.is_array()) throw ParseError("\"terms\" must be an array");
    for (const auto& t : tj)
      terms.push_back({gaussian_from_json(member(t, "theta")), poly_from_json(member(t, "poly"), "poly")});
    std::map<int, Rational> specials;
    if (j.contains("specials")) {
      if (!j.at("specials").is_object()) throw ParseError("\"specials\" must be an object");
      for (const auto& [k, v] : j.at("specials").items()) {
        try {
          specials.emplace(std::stoi(k), rational_from_json(v));
        } catch (const std::logic_error&) {
          throw ParseError("special lag \"" + k + "\" is not an integer");
        }
      }
    }
    const Json& vf = member(j, "valid_from");
    if (!vf.is_number_integer()) throw ParseError("\"valid_from\" must be an integer");
    return Correlogram(std::move(terms), std::move(specials), vf.get<int>(), rational_from_json(member(j, "variance")));
  }
  throw ParseError("unknown form \"" + form + "\"");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

}  // namespace armatri
