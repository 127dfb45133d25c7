// armatri: convert ARMA models between coefficient, correlogram and spectral form.

#include "armatri/convert.hpp"
#include "armatri/errors.hpp"
#include "armatri/json_io.hpp"
#include "armatri/montecarlo.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

using namespace armatri;

namespace {

enum Exit { kOk = 0, kIo = 1, kInvalid = 2, kNotExpressible = 3 };

struct Options {
  std::string from;
  std::string to;
  std::string input;
  std::string output;
  std::string ma_policy = "invertible";
  int grid = 0;
  int k_max = -1;
  std::uint64_t seed = 1;
  long n = 10000;
  long burn_in = -1;
  bool exact = false;
  unsigned threads = 1;
  int precision = 12;
  std::string series_out;
  std::string periodogram_out;
  Taper taper = Taper::Hann;
  std::string metadata_out;
};

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

Form load(const Options& o) {
  Form f = form_from_json(read_json_file(o.input));
  if (!o.from.empty() && form_name(f) != o.from)
    throw ParseError("input is a \"" + form_name(f) + "\" document but --from says \"" + o.from + "\"");
  return f;
}

const ArmaModel& single_model(const Form& f) {
  if (const auto* m = std::get_if<ArmaModel>(&f)) return *m;
  if (const auto* set = std::get_if<std::vector<ArmaModel>>(&f); set && set->size() == 1) return set->front();
  throw ParseError("expected a single coefficient model");
}

Correlogram as_correlogram(const Form& f) {
  if (const auto* c = std::get_if<Correlogram>(&f)) return *c;
  if (const auto* s = std::get_if<SpectralDensity>(&f)) return spectral_to_correlogram(*s);
  return ag_to_correlogram(single_model(f));
}

SpectralDensity as_spectral(const Form& f) {
  if (const auto* s = std::get_if<SpectralDensity>(&f)) return *s;
  if (const auto* c = std::get_if<Correlogram>(&f)) return correlogram_to_spectral(*c);
  return ag_to_spectral(single_model(f));
}

MaPolicy parse_policy(const std::string& p) {
  if (p == "invertible") return MaPolicy::Invertible;
  if (p == "enumerate") return MaPolicy::EnumerateAll;
  throw ParseError("unknown MA policy \"" + p + "\"");
}

int run_validate(const Options& o) {
  const Form f = load(o);
  Json out;
  out["form"] = form_name(f);
  bool ok = true;
  std::string reason;
  if (std::holds_alternative<ArmaModel>(f)) {
    const ValidationReport r = validate(std::get<ArmaModel>(f));
    Json roots = Json::array();
    for (const auto& rm : r.ar_roots) roots.push_back(Json{{"root", to_json(rm.root)}, {"multiplicity", rm.multiplicity}});
    out["stationary"] = r.stationary;
    out["coprime"] = r.coprime;
    out["ar_roots"] = roots;
    ok = r.ok();
    if (!r.stationary)
      reason = "not stationary: every root of the AR characteristic polynomial must be smaller than 1 in absolute value";
    else if (!r.coprime)
      reason = "the AR and MA characteristic polynomials share a root";
  } else if (std::holds_alternative<SpectralDensity>(f)) {
    LegitimacyOptions lo;
    lo.threads = o.threads;
    const LegitimacyReport r = check_legitimate(std::get<SpectralDensity>(f), lo);
    out["legitimate"] = r.legitimate();
    ok = r.legitimate();
    reason = r.reason;
  }
  out["valid"] = ok;
  if (!ok) {
    out["reason"] = reason;
    std::cerr << "armatri: " << reason << '\n';
  }
  write_text(o.output, out.dump(2) + "\n");
  return ok ? kOk : kInvalid;
}

int run_convert(const Options& o) {
  if (o.from.empty() || o.to.empty()) throw ParseError("convert needs --from and --to");
  if (o.from == o.to) throw ParseError("--from and --to must differ");
  const Form f = load(o);
  Json out;
  if (o.to == "correlogram") {
    out = to_json(as_correlogram(f));
  } else if (o.to == "spectral") {
    out = to_json(as_spectral(f));
  } else if (o.to == "ag") {
    if (const auto* c = std::get_if<Correlogram>(&f)) {
      out = to_json(correlogram_to_ag(*c));
    } else {
      const MaPolicy policy = parse_policy(o.ma_policy);
      const auto models = spectral_to_ag(std::get<SpectralDensity>(f), {policy, {}});
      out = policy == MaPolicy::Invertible ? to_json(models.front()) : to_json(models);
    }
  } else {
    throw ParseError("unknown target form \"" + o.to + "\"");
  }
  write_text(o.output, out.dump(2) + "\n");
  return kOk;
}

int run_eval(const Options& o) {
  if (o.k_max < 0 && o.grid <= 0) throw ParseError("eval needs --k-max or --grid");
  const Form f = load(o);
  std::ostringstream os;
  if (o.k_max >= 0) {
    const Correlogram c = as_correlogram(f);
    os << "k,rho\n";
    for (int k = 0; k <= o.k_max; ++k) {
      const Rational v = rho(c, k).re();
      os << k << ',' << (o.exact ? v.str() : v.decimal(o.precision)) << '\n';
    }
  } else {
    const SpectralDensity s = as_spectral(f);
    os << "beta,omega\n";
    for (int j = 0; j < o.grid; ++j) {
      const double beta = o.grid == 1 ? 0.0 : std::numbers::pi * j / (o.grid - 1);
      os << fmt(beta, o.precision) << ',' << fmt(eval_omega(s, beta), o.precision) << '\n';
    }
  }
  write_text(o.output, os.str());
  return kOk;
}

int run_simulate(const Options& o) {
  const Form f = load(o);
  const ArmaModel& m = single_model(f);
  SimConfig cfg;
  cfg.n = o.n;
  cfg.seed = o.seed;
  cfg.burn_in = o.burn_in;
  const auto x = simulate(m, cfg);

  const int max_lag = o.k_max >= 0 ? o.k_max : 10;
  const AcfEstimate acf = empirical_acf(x, std::min<long>(max_lag, static_cast<long>(x.size()) - 1));
  std::ostringstream os;
  os << "k,rho_hat,std_err\n";
  for (const auto& l : acf.lags) os << l.k << ',' << fmt(l.rho_hat, o.precision) << ',' << fmt(l.std_err, o.precision) << '\n';
  write_text(o.output, os.str());

  if (!o.series_out.empty()) {
    std::ostringstream ss;
    ss << "t,x\n";
    for (std::size_t t = 0; t < x.size(); ++t) ss << t << ',' << fmt(x[t], o.precision) << '\n';
    write_text(o.series_out, ss.str());
  }
  if (!o.periodogram_out.empty()) {
    std::ostringstream ps;
    ps << "beta,power\n";
    for (const auto& pt : periodogram(x, o.taper)) ps << fmt(pt.beta, o.precision) << ',' << fmt(pt.power, o.precision) << '\n';
    write_text(o.periodogram_out, ps.str());
  }
  if (!o.metadata_out.empty()) {
    const Json meta{{"generator", std::string(kGeneratorName)},
                    {"seed", cfg.seed},
                    {"taper", o.taper == Taper::Hann ? "hann" : "none"},
                    {"burn_in", effective_burn_in(cfg, m)},
                    {"n", cfg.n}};
    write_text(o.metadata_out, meta.dump(2) + "\n");
  }
  return kOk;
}

int run_roundtrip(const Options& o) {
  const Form f = load(o);
  const Correlogram c = as_correlogram(f);
  const SpectralDensity s = as_spectral(f);

  Json checks;
  checks["spectral_to_correlogram"] = spectral_to_correlogram(s) == c;
  checks["correlogram_to_spectral"] = correlogram_to_spectral(c) == s;
  const auto models = spectral_to_ag(s);
  const ArmaModel& m = models.front();
  checks["ag_to_correlogram"] = ag_to_correlogram(m) == c;
  checks["ag_to_spectral"] = ag_to_spectral(m) == s;
  const auto all = correlogram_to_ag(c);
  checks["correlogram_to_ag"] = std::find(all.begin(), all.end(), m) != all.end();
  if (const auto* given = std::get_if<ArmaModel>(&f))
    checks["input_recovered"] = std::find(all.begin(), all.end(), *given) != all.end();

  bool closed = true;
  for (const auto& [k, v] : checks.items()) closed = closed && v.get<bool>();
  const Json out{{"form", form_name(f)}, {"closed", closed}, {"checks", checks}};
  write_text(o.output, out.dump(2) + "\n");
  if (!closed) std::cerr << "armatri: conversions do not commute for this input\n";
  return closed ? kOk : kInvalid;
}

int run_legitimacy(const Options& o) {
  const SpectralDensity s = as_spectral(load(o));
  LegitimacyOptions lo;
  if (o.grid > 0) lo.grid_points = o.grid;
  lo.threads = o.threads;
  const LegitimacyReport r = check_legitimate(s, lo);
  Json out{{"legitimate", r.legitimate()},
           {"bounded", r.bounded},
           {"exact_pole_check", r.exact_pole_check},
           {"normalized", r.normalized},
           {"nonnegative", r.nonnegative},
           {"integral", std::isfinite(r.integral) ? Json(r.integral) : Json(nullptr)},
           {"min_value", r.min_value}};
  if (!r.legitimate()) {
    out["reason"] = r.reason;
    std::cerr << "armatri: " << r.reason << '\n';
  }
  write_text(o.output, out.dump(2) + "\n");
  return r.legitimate() ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conversions between the coefficient, correlogram and spectral forms of ARMA models"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> forms{"ag", "correlogram", "spectral", "ag_set"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "input JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--output,-o", o.output, "output file (default stdout)");
    sub->add_option("--from", o.from, "expected form of the input")->check(CLI::IsMember(forms));
    sub->add_option("--precision", o.precision, "significant digits in decimal output")->check(CLI::Range(1, 40));
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* validate_cmd = app.add_subcommand("validate", "check stationarity, coprimality or legitimacy");
  add_common(validate_cmd);

  auto* convert_cmd = app.add_subcommand("convert", "convert between representations");
  add_common(convert_cmd);
  convert_cmd->add_option("--to", o.to, "target form")->required()->check(CLI::IsMember({"ag", "correlogram", "spectral"}));
  convert_cmd->add_option("--ma-policy", o.ma_policy, "MA root selection")->check(CLI::IsMember({"invertible", "enumerate"}));

  auto* eval_cmd = app.add_subcommand("eval", "tabulate rho_k or omega(beta) as CSV");
  add_common(eval_cmd);
  eval_cmd->add_option("--k-max", o.k_max, "largest lag")->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--grid", o.grid, "number of beta points on [0, pi]")->check(CLI::PositiveNumber);
  eval_cmd->add_flag("--exact", o.exact, "print exact rationals for rho_k");

  auto* sim_cmd = app.add_subcommand("simulate", "simulate a path and report its sample ACF");
  add_common(sim_cmd);
  sim_cmd->add_option("--n", o.n, "series length")->check(CLI::PositiveNumber);
  sim_cmd->add_option("--seed", o.seed, "generator seed");
  sim_cmd->add_option("--burn-in", o.burn_in, "discarded initial values (default 1000 + 50 p)");
  sim_cmd->add_option("--k-max", o.k_max, "largest ACF lag (default 10)")->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--series", o.series_out, "write the series as CSV");
  sim_cmd->add_option("--periodogram", o.periodogram_out, "write the periodogram as CSV");
  sim_cmd->add_option("--taper", o.taper, "periodogram window: hann (default) or none")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Taper>{{"hann", Taper::Hann}, {"none", Taper::None}}));
  sim_cmd->add_option("--metadata", o.metadata_out, "write generator metadata as JSON");

  auto* rt_cmd = app.add_subcommand("roundtrip", "check that every conversion path agrees");
  add_common(rt_cmd);

  auto* legit_cmd = app.add_subcommand("legitimacy", "check that a spectral density is legitimate");
  add_common(legit_cmd);
  legit_cmd->add_option("--grid", o.grid, "non-negativity grid size (default 10001)")->check(CLI::Range(2, 10000000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kIo;
  }

  try {
    if (*validate_cmd) return run_validate(o);
    if (*convert_cmd) return run_convert(o);
    if (*eval_cmd) return run_eval(o);
    if (*sim_cmd) return run_simulate(o);
    if (*rt_cmd) return run_roundtrip(o);
    if (*legit_cmd) return run_legitimacy(o);
  } catch (const RootsNotExpressible& e) {
    std::cerr << "armatri: roots not expressible in Q(i): " << e.what() << '\n';
    return kNotExpressible;
  } catch (const ValidationError& e) {
    std::cerr << "armatri: " << e.what() << '\n';
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "armatri: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "armatri: " << e.what() << '\n';
    return kIo;
  }
  return kIo;
}
