#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynalg/cli.hpp"
#include "dynalg/report.hpp"

using namespace dynalg;
using nlohmann::json;

namespace {

RunConfig small_do() {
  RunConfig c;
  c.model = "do";
  c.n_max = 16;
  return c;
}

RunConfig small_jc() {
  RunConfig c;
  c.model = "jc";
  c.n_max = 16;
  c.J = 0.2;
  return c;
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_CASE("verification passes for every model at compact sizes") {
  const VerificationReport oscillator = run_verify(small_do());
  CHECK(oscillator.pass);
  CHECK(oscillator.duration_seconds > 0.0);
  CHECK(!oscillator.spectrum.empty());
  CHECK(oscillator.cartan.size() == 4);

  const VerificationReport cavity = run_verify(small_jc());
  CHECK(cavity.pass);

  RunConfig lattice;
  lattice.model = "dirac2d";
  lattice.guard = 1;
  const VerificationReport planar = run_verify(lattice);
  CHECK(planar.pass);
  CHECK(planar.spectrum.empty());
  CHECK(planar.checks.size() == 4);
}

TEST_CASE("json reports repeat exactly once the timing field is removed") {
  const std::string first = report_to_json(run_verify(small_do()));
  const std::string second = report_to_json(run_verify(small_do()));
  json a = json::parse(first);
  json b = json::parse(second);
  CHECK(a.contains("duration_seconds"));
  a.erase("duration_seconds");
  b.erase("duration_seconds");
  CHECK(a.dump(2) == b.dump(2));

  // The configuration echo pins the layout convention.
  CHECK(a["config"]["basis_ordering"] == "spin-major, up block first");
  CHECK(a["config"]["model"] == "do");
  CHECK(a["config"]["n_max"] == 16);
  CHECK(a["config"]["params"]["m"] == 1.0);
}

TEST_CASE("csv and json agree on the check verdicts") {
  const VerificationReport report = run_verify(small_jc());
  const json j = json::parse(report_to_json(report));
  const std::string csv = report_to_csv(report);

  // Count data rows of the checks table: they all start with a quoted name.
  std::istringstream lines(csv);
  std::string line;
  int rows = 0;
  bool in_checks = false;
  std::vector<std::string> row_text;
  while (std::getline(lines, line)) {
    if (line.rfind("name,residual", 0) == 0) {
      in_checks = true;
      continue;
    }
    if (in_checks && (line.empty() || line.rfind("branch,", 0) == 0)) break;
    if (in_checks) {
      ++rows;
      row_text.push_back(line);
    }
  }
  CHECK(rows == static_cast<int>(j["checks"].size()));
  for (int i = 0; i < rows; ++i) {
    const std::string name = j["checks"][i]["name"].get<std::string>();
    CHECK(row_text[i].find('"' + name + '"') == 0);
    const bool pass = j["checks"][i]["pass"].get<bool>();
    const std::string tail = pass ? ",true" : ",false";
    CHECK(row_text[i].rfind(tail) == row_text[i].size() - tail.size());
  }
}

TEST_CASE("config validation rejects out-of-range settings") {
  RunConfig c = small_do();
  c.model = "nope";
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_do();
  c.n_max = 7;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_do();
  c.guard = 0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_do();
  c.guard = c.n_max;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = small_do();
  c.tolerance = 0.0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  // Parameter-value violations are delegated and arrive as domain errors.
  c = small_do();
  c.m = -1.0;
  CHECK_THROWS_AS(validate(c), std::domain_error);
  c = small_jc();
  c.Omega = 0.0;
  CHECK_THROWS_AS(validate(c), std::domain_error);
  RunConfig lat;
  lat.model = "dirac2d";
  lat.l_min = 5;
  lat.l_max = 5;
  CHECK_THROWS_AS(validate(lat), std::invalid_argument);
}

TEST_CASE("sweeps aggregate the worst result per check across the grid") {
  const RunConfig base = small_do();
  RunConfig alt = base;
  alt.omega = 0.5;
  const VerificationReport sweep = run_sweep(base, {base, alt});
  CHECK(sweep.pass);
  CHECK(sweep.sweep.size() == 2);
  CHECK(sweep.sweep[0].params ==
        std::vector<std::pair<std::string, double>>{{"m", 1.0}, {"omega", 1.0}});
  CHECK(sweep.sweep[1].params ==
        std::vector<std::pair<std::string, double>>{{"m", 1.0}, {"omega", 0.5}});

  const VerificationReport single = run_verify(base);
  CHECK(sweep.checks.size() == single.checks.size());
  for (size_t i = 0; i < single.checks.size(); ++i) {
    CHECK(sweep.checks[i].name == single.checks[i].name);
    CHECK(sweep.checks[i].residual >= single.checks[i].residual);
  }
  CHECK_THROWS_AS(run_sweep(base, {}), std::invalid_argument);
}

TEST_CASE("the command line honors its exit code contract") {
  std::string out;
  std::string err;

  CHECK(cli({"verify", "--model", "do", "--nmax", "16"}, &out) == 0);
  CHECK(out.find("\"pass\": true") != std::string::npos);

  // Impossibly tight tolerance: the run completes, the report says fail.
  CHECK(cli({"verify", "--model", "do", "--nmax", "16", "--tol", "1e-18"},
            &out) == 1);
  CHECK(out.find("\"pass\": false") != std::string::npos);

  CHECK(cli({"--help"}, &out) == 0);
  CHECK(out.find("spectrum") != std::string::npos);

  CHECK(cli({}) == 2);
  CHECK(cli({"verify", "--model", "nope"}) == 2);
  CHECK(cli({"verify", "--bogus-flag"}) == 2);
  CHECK(cli({"verify", "--nmax", "4"}) == 2);
  CHECK(cli({"verify", "--param", "m=1", "--param", "m=2"}) == 2);
  CHECK(cli({"verify", "--param", "m=1,2"}, nullptr, &err) == 2);
  CHECK(err.find("sweep") != std::string::npos);
  CHECK(cli({"verify", "--param", "junk"}) == 2);
  CHECK(cli({"sweep", "--param", "m="}) == 2);
  CHECK(cli({"sweep", "--param", "q=1"}) == 2);
  CHECK(cli({"verify", "--model", "dirac2d", "--guard", "1", "--param",
             "lmin=0.5"}) == 2);
  CHECK(cli({"verify", "--model", "jc", "--param", "J=0"}) == 2);

  CHECK(cli({"verify", "--model", "do", "--nmax", "16", "--out",
             "/nonexistent-dir/report.json"}) == 3);
}

TEST_CASE("the command line writes reports to files in both formats") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dynalg-cli-test";
  fs::create_directories(dir);
  const fs::path json_path = dir / "report.json";
  const fs::path csv_path = dir / "report.csv";

  CHECK(cli({"spectrum", "--model", "jc", "--nmax", "16", "--out",
             json_path.string()}) == 0);
  std::ifstream jf(json_path);
  json j = json::parse(jf);
  CHECK(j["checks"].empty());
  CHECK(!j["spectrum"].empty());
  bool saw_detached = false;
  for (const auto& row : j["spectrum"]) {
    if (row["detached"].get<bool>()) saw_detached = true;
  }
  CHECK(saw_detached);

  CHECK(cli({"spectrum", "--model", "do", "--nmax", "16", "--format", "csv",
             "--out", csv_path.string()}) == 0);
  std::ifstream cf(csv_path);
  std::string first_line;
  std::getline(cf, first_line);
  CHECK(first_line.rfind("# model=do", 0) == 0);

  fs::remove_all(dir);
}

TEST_CASE("sweep builds the cartesian grid with the last flag varying fastest") {
  std::string out;
  CHECK(cli({"sweep", "--model", "jc", "--nmax", "16", "--param", "J=0.1,0.2",
             "--param", "Omega=1.0,1.5"},
            &out) == 0);
  const json j = json::parse(out);
  REQUIRE(j["sweep"].size() == 4);
  CHECK(j["sweep"][0]["params"]["J"] == 0.1);
  CHECK(j["sweep"][0]["params"]["Omega"] == 1.0);
  CHECK(j["sweep"][1]["params"]["J"] == 0.1);
  CHECK(j["sweep"][1]["params"]["Omega"] == 1.5);
  CHECK(j["sweep"][2]["params"]["J"] == 0.2);
  CHECK(j["sweep"][3]["params"]["Omega"] == 1.5);
  CHECK(j["pass"] == true);

  // The aggregate table survives in the sweep report.
  CHECK(!j["checks"].empty());
}
