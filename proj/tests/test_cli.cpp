#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const std::string err_path = "test_cli_stderr.txt";
  const std::string cmd = std::string(VL_CLI_PATH) + " " + args + " 2>" + err_path;
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err_path);
  std::remove(err_path.c_str());
  return r;
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char ch = line[i];
      if (quoted) {
        if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else if (ch == '"') {
          quoted = false;
        } else {
          field += ch;
        }
      } else if (ch == '"') {
        quoted = true;
      } else if (ch == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += ch;
      }
    }
    fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

std::map<std::string, double> by_quantity(const std::vector<nlohmann::json>& recs) {
  std::map<std::string, double> m;
  for (const auto& r : recs) m[r["quantity"].get<std::string>()] = r["value"].get<double>();
  return m;
}

}  // namespace

TEST_CASE("mu0 defaults in JSON") {
  const auto r = run("mu0 --format json");
  REQUIRE(r.status == 0);
  const auto recs = json_lines(r.out);
  REQUIRE(!recs.empty());
  for (const auto& rec : recs) {
    CHECK(rec.contains("units"));
    CHECK(rec["config_fingerprint"].get<std::string>().size() == 16);
    CHECK(rec["provenance"] == "analytic");
  }
  const auto v = by_quantity(recs);
  CHECK(v.at("mu0") > 5.0e-6);
  CHECK(v.at("mu0") < 6.2e-6);
  CHECK(recs[0]["units"] == "H/m");
}

TEST_CASE("massless dispersion") {
  const auto r = run("dispersion --masses zero --format json");
  REQUIRE(r.status == 0);
  CHECK(by_quantity(json_lines(r.out)).at("sigma_per_sqrt_length") == doctest::Approx(1.98364e-18).epsilon(1e-5));
}

TEST_CASE("seeded simulation output is byte-identical") {
  const std::string args = "simulate --length 1e-14m --seed 7 --chains 20 --format csv";
  const auto a = run(args + " --threads 1");
  const auto b = run(args + " --threads 1");
  const auto c = run(args + " --threads 4");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("monte-carlo") != std::string::npos);
}

TEST_CASE("CSV and JSON carry identical values") {
  for (const std::string cmd : {"mu0 --breakdown", "constants", "speed --photon-energy 100keV", "sensitivity",
                                "sweep --param temperature_gev --from 50 --to 500 --points 4 --log"}) {
    CAPTURE(cmd);
    const auto j = run(cmd + " --format json");
    const auto c = run(cmd + " --format csv");
    REQUIRE(j.status == 0);
    REQUIRE(c.status == 0);
    const auto recs = json_lines(j.out);
    const auto rows = csv_rows(c.out);
    REQUIRE(rows.size() == recs.size() + 1);
    const auto& header = rows[0];
    auto col = [&](const std::string& name) {
      for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
      FAIL("missing column " << name);
      return std::size_t{0};
    };
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const auto& row = rows[i + 1];
      CHECK(row[col("quantity")] == recs[i]["quantity"].get<std::string>());
      CHECK(std::strtod(row[col("value")].c_str(), nullptr) == recs[i]["value"].get<double>());
      CHECK(row[col("units")] == recs[i]["units"].get<std::string>());
      CHECK(row[col("config_fingerprint")] == recs[i]["config_fingerprint"].get<std::string>());
      CHECK(row[col("provenance")] == recs[i]["provenance"].get<std::string>());
    }
  }
}

TEST_CASE("config file and flags compose with flags winning") {
  const std::string path = "test_cli_config.cfg";
  {
    std::ofstream out(path);
    out << "# test\ntemperature_gev = 100\nmass_mode = zero\n";
  }
  const auto r = run("--config " + path + " --masses physical --verbose dispersion");
  std::remove(path.c_str());
  REQUIRE(r.status == 0);
  CHECK(r.err.find("temperature_gev = 100") != std::string::npos);
  CHECK(r.err.find("mass_mode = physical") != std::string::npos);
  const auto s = run("--set temperature_gev=100 --temperature 200GeV mu0 --verbose");
  CHECK(s.err.find("temperature_gev = 200") != std::string::npos);
}

TEST_CASE("usage errors exit with 1 and name the token") {
  auto r = run("mu0 --frobnicate");
  CHECK(r.status == 1);
  CHECK(r.err.find("--frobnicate") != std::string::npos);
  r = run("--set vacuum_colour=3 mu0");
  CHECK(r.status == 1);
  CHECK(r.err.find("vacuum_colour") != std::string::npos);
  r = run("band --e1 5GeV --e2 1GeV");
  CHECK(r.status == 1);
  r = run("speed --photon-energy 3parsec");
  CHECK(r.status == 1);
  r = run("");
  CHECK(r.status == 1);
  r = run("--config /nonexistent.cfg mu0");
  CHECK(r.status == 1);
}

TEST_CASE("numerical failures exit with 2") {
  const auto r = run("simulate --length 1e-9m --max-steps 1000");
  CHECK(r.status == 2);
  CHECK(r.err.find("max_steps") != std::string::npos);
  const auto q = run("--rel-tol 1e-30 mu0");
  CHECK(q.status == 2);
  CHECK(q.err.find("inverse_mu0[") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = run("--help");
  CHECK(r.status == 0);
  CHECK(r.out.find("simulate") != std::string::npos);
}

TEST_CASE("every subcommand runs in every format") {
  for (const std::string cmd : {"constants", "mu0", "speed", "band --e1 1GeV --e2 50GeV", "dispersion", "cavity",
                                "sensitivity", "simulate --length 1e-15m --chains 4",
                                "sweep --param degeneracy_multiplier --from 1 --to 4 --points 4"}) {
    for (const std::string fmt : {"table", "csv", "json"}) {
      CAPTURE(cmd);
      CAPTURE(fmt);
      const auto r = run(cmd + " --format " + fmt);
      CHECK(r.status == 0);
      CHECK(!r.out.empty());
    }
  }
}
