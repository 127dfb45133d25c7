#pragma once

#include "armatri/correlogram.hpp"
#include "armatri/model.hpp"
#include "armatri/spectral.hpp"

#include "json.hpp"

#include <string>
#include <variant>
#include <vector>

namespace armatri {

using Json = nlohmann::ordered_json;

/// A file-level document: one representation, or a list of coefficient models.
using Form = std::variant<ArmaModel, Correlogram, SpectralDensity, std::vector<ArmaModel>>;

/// "ag", "correlogram", "spectral" or "ag_set".
std::string form_name(const Form& f);

Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json to_json(const ArmaModel& m);
Json to_json(const Correlogram& c);
Json to_json(const SpectralDensity& s);
Json to_json(const std::vector<ArmaModel>& models);
Json to_json(const Form& f);

/// Accepts "n/d" strings, decimal strings and JSON integers.
Rational rational_from_json(const Json& j);
/// Accepts {"re": ..., "im": ...} or a plain rational.
GaussianRational gaussian_from_json(const Json& j);

/// The "form" member selects the schema. Throws ParseError on schema errors
/// and ValidationError when the content breaks an invariant.
Form form_from_json(const Json& j);

Json read_json_file(const std::string& path);
/// Writes to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace armatri
