#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "armatri/json_io.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace armatri;

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(ARMATRI_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(ARMATRI_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("armatri_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("convert coefficient form to spectral") {
  const Result r = run("convert --from ag --to spectral -i " + data("ex1_ag.json"));
  REQUIRE(r.status == 0);
  const Form f = form_from_json(Json::parse(r.out));
  const auto& s = std::get<SpectralDensity>(f);
  const DisplayForm d = display_form(s);
  CHECK(d.factor == Rational(2016, 113));
  CHECK(d.numerator == Poly{8, -12, 5});
  CHECK(d.denominator == Poly{13325, -38092, 36288, -11520});
  CHECK(s.variance() == Rational(113, 14));
}

TEST_CASE("exit codes") {
  CHECK(run("validate -i " + data("nonstationary_ag.json")).status == 2);
  CHECK(run("validate -i " + data("ex1_ag.json")).status == 0);
  CHECK(run("validate -i /nonexistent.json").status == 1);
  CHECK(run("convert --from spectral --to ag -i " + data("ex1_ag.json")).status == 1);
  CHECK(run("convert --from ag --to ag -i " + data("ex1_ag.json")).status == 1);
  CHECK(run("bogus").status == 1);
  const std::string bad = temp_file("bad.json", R"({"form": "ag", "ar": ["1/0"], "sigma": "1"})");
  CHECK(run("validate -i " + bad).status == 1);
  const std::string irr =
      temp_file("irr.json", R"({"form": "spectral", "numerator": ["1"], "denominator": ["-2", "0", "1"], "variance": "1"})");
  CHECK(run("convert --from spectral --to ag -i " + irr).status == 3);
  const std::string neg =
      temp_file("neg.json", R"({"form": "spectral", "numerator": ["-1"], "denominator": ["1"], "variance": "1"})");
  CHECK(run("legitimacy -i " + neg).status == 2);
  const std::string unnormalized = temp_file(
      "un.json", R"({"form": "spectral", "numerator": ["8", "-12", "5"], "denominator": ["13325", "-38092", "36288", "-11520"], "variance": "113/14"})");
  CHECK(run("convert --from spectral --to ag -i " + unnormalized).status == 2);
}

TEST_CASE("validation message names the condition") {
  const std::string cmd = std::string(ARMATRI_CLI) + " validate -i " + data("nonstationary_ag.json") + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[1024] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, pipe);
  pclose(pipe);
  CHECK(std::string(buf, n).find("stationary") != std::string::npos);
}

TEST_CASE("roundtrip reports closure") {
  for (const char* f : {"ex1_ag.json", "ex2_ag.json", "ex3_ag.json"}) {
    const Result r = run(std::string("roundtrip -i ") + data(f));
    CHECK(r.status == 0);
    CHECK(Json::parse(r.out).at("closed").get<bool>());
  }
}

TEST_CASE("eval tables") {
  const Result c2 = run("convert --from ag --to correlogram -i " + data("ex2_ag.json"));
  REQUIRE(c2.status == 0);
  const std::string corr = temp_file("c2.json", c2.out);
  const Result rows = run("eval --from correlogram --k-max 4 -i " + corr);
  CHECK(rows.status == 0);
  CHECK(rows.out.rfind("k,rho\n0,1\n1,0.81\n", 0) == 0);
  CHECK(run("eval --k-max 1 --exact -i " + corr).out == "k,rho\n0,1\n1,81/100\n");

  const std::string white =
      temp_file("white.json", R"({"form": "spectral", "numerator": ["1"], "denominator": ["1"], "variance": "1"})");
  CHECK(run("eval --grid 5 -i " + white).out == "beta,omega\n0,1\n0.785398163397,1\n1.57079632679,1\n2.35619449019,1\n3.14159265359,1\n");

  const Result s3 = run("convert --from ag --to spectral -i " + data("ex3_ag.json"));
  const std::string spec = temp_file("s3.json", s3.out);
  CHECK(run("eval --grid 1 --precision 7 -i " + spec).out == "beta,omega\n0,7.363636\n");
  CHECK(run("eval -i " + spec).status == 1);
}

TEST_CASE("enumerated coefficient models") {
  const Result s = run("convert --from ag --to spectral -i " + data("ex1_ag.json"));
  const std::string spec = temp_file("s1.json", s.out);
  const Result all = run("convert --from spectral --to ag --ma-policy enumerate -i " + spec);
  REQUIRE(all.status == 0);
  const auto models = std::get<std::vector<ArmaModel>>(form_from_json(Json::parse(all.out)));
  CHECK(models.size() == 2);
  const Result one = run("convert --from spectral --to ag -i " + spec);
  const auto m = std::get<ArmaModel>(form_from_json(Json::parse(one.out)));
  CHECK(m.sigma2() == Rational(1, 4));
}

TEST_CASE("output is byte-identical across runs") {
  const std::string args = "simulate --n 2000 --seed 5 --k-max 5 -i " + data("ex1_ag.json");
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("k,rho_hat,std_err\n", 0) == 0);
  const std::string meta = (std::filesystem::temp_directory_path() / "armatri_cli_meta.json").string();
  CHECK(run(args + " --metadata " + meta).status == 0);
  std::ifstream in(meta);
  const Json j = Json::parse(in);
  CHECK(j.at("generator") == "mt19937_64/box-muller");
  CHECK(j.at("burn_in") == 1150);
  CHECK(run("convert --from ag --to correlogram -i " + data("ex3_ag.json")).out ==
        run("convert --from ag --to correlogram -i " + data("ex3_ag.json")).out);
}

TEST_CASE("legitimacy report") {
  const Result s = run("convert --from ag --to spectral -i " + data("ex1_ag.json"));
  const std::string spec = temp_file("legit.json", s.out);
  const Result r = run("legitimacy --threads 2 -i " + spec);
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out).at("legitimate").get<bool>());
}
