#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "qcalc/cli.hpp"

using namespace qcalc;
using Json = nlohmann::json;

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval examples") {
  auto r = run({"eval", "e_q", "--x", "0", "--q", "2"});
  REQUIRE(r.rc == kExitOk);
  auto j = Json::parse(r.out);
  CHECK(j["value"] == "1");
  CHECK(j.contains("terms_used"));
  CHECK(j.contains("cancellation_digits"));

  r = run({"eval", "hermite", "--N", "2", "--q", "2", "--x", "1"});
  REQUIRE(r.rc == kExitOk);
  j = Json::parse(r.out);
  CHECK(j["value"] == "6");
  CHECK(j["exact"] == true);

  r = run({"eval", "kdf", "--N", "3", "--x", "1/2", "--t", "1"});
  CHECK(Json::parse(r.out)["value"] == "85/8");  // x^3 + 21 x t

  r = run({"eval", "shock", "--k", "1,-1", "--offset", "10", "--q", "10", "--nu", "1", "--x", "3", "--t", "0"});
  REQUIRE(r.rc == kExitOk);
  const double u = std::stod(Json::parse(r.out)["value"].get<std::string>());
  CHECK(u < 0);
  CHECK(u > -2);

  r = run({"eval", "psi", "--p", "1", "--x", "0", "--t", "0", "--format", "csv"});
  REQUIRE(r.rc == kExitOk);
  CHECK(r.out.rfind("function,value,exact,terms_used,cancellation_digits\n", 0) == 0);
}

TEST_CASE("exit code 2 on configuration and domain errors") {
  CHECK(run({"eval", "hermite", "--N", "2"}).rc == kExitUsage);                 // missing --x
  CHECK(run({"eval", "e_q", "--x", "1", "--t", "1"}).rc == kExitUsage);         // extra --t
  CHECK(run({"eval", "e_q", "--x", "1", "--q", "0.5"}).rc == kExitUsage);       // q < 1
  CHECK(run({"eval", "e_q", "--x", "1", "--q", "abc"}).rc == kExitUsage);
  CHECK(run({"eval", "e_q", "--x", "1", "--precision-bits", "32"}).rc == kExitUsage);
  CHECK(run({"eval", "e_q", "--x", "1", "--format", "xml"}).rc == kExitUsage);
  CHECK(run({"eval", "e_q", "--x", "1", "--nu", "0"}).rc == kExitUsage);
  CHECK(run({"eval", "e_q", "--x", "1", "--tolerance", "-1"}).rc == kExitUsage);
  CHECK(run({"eval", "gamma_q", "--x", "1"}).rc == kExitUsage);
  CHECK(run({"verify", "nonsense"}).rc == kExitUsage);
  CHECK(run({"figure", "fig7"}).rc == kExitUsage);
  CHECK(run({"frobnicate"}).rc == kExitUsage);
  CHECK(run({}).rc == kExitUsage);
  const auto r = run({"eval", "e_q", "--x", "1", "--q", "0.5"});
  CHECK(r.err.find("q must be") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);  // one line
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).rc == kExitOk); }

TEST_CASE("verify report shape and exit codes") {
  auto r = run({"verify", "hermite-identities", "--q", "2", "--Nmax", "8"});
  REQUIRE(r.rc == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["suite"] == "hermite-identities");
  CHECK(j["pass"] == true);
  REQUIRE(j["checks"].size() > 4);
  for (const auto& c : j["checks"]) {
    for (const char* key : {"check", "paper_ref", "params", "residual_max", "exact", "pass"}) CHECK(c.contains(key));
  }

  r = run({"verify", "heat", "--tolerance", "1e-200"});
  CHECK(r.rc == kExitVerifyFailed);
  CHECK(Json::parse(r.out)["pass"] == false);
  CHECK(r.err.find("plane wave") != std::string::npos);
}

TEST_CASE("burgers suite reports the calibrated reading") {
  const auto r = run({"verify", "burgers", "--q", "10"});
  REQUIRE(r.rc == kExitOk);
  const auto j = Json::parse(r.out);
  bool saw_variant = false;
  for (const auto& c : j["checks"]) {
    if (c.contains("variant")) {
      saw_variant = true;
      CHECK(c["variant"] == "u-times-op-on-du/plain-time");
    }
  }
  CHECK(saw_variant);
}

TEST_CASE("reports are deterministic") {
  const auto a = run({"verify", "kdf-identities", "--seed", "7", "--Nmax", "10"});
  const auto b = run({"verify", "kdf-identities", "--seed", "7", "--Nmax", "10"});
  CHECK(a.rc == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("figures") {
  const auto r = run({"figure", "fig2"});
  REQUIRE(r.rc == kExitOk);
  CHECK(r.out.rfind("x,u\n", 0) == 0);
  CHECK(r.out.find("\n0.00,0\n") != std::string::npos);
  CHECK(r.out.find('\r') == std::string::npos);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 2002);
  CHECK(r.out.find("\n-50.00,") != std::string::npos);
  CHECK(r.out.find("\n50.00,") != std::string::npos);
  CHECK(figure_csv("fig2", 256) == r.out);
  CHECK(run({"figure", "fig1", "--out", "/nonexistent-dir/x.csv"}).rc == kExitUsage);
}

TEST_CASE("similarity") {
  auto r = run({"similarity", "--format", "csv"});
  REQUIRE(r.rc == kExitOk);
  CHECK(r.out == "metric\n1\n");
  r = run({"similarity", "--k", "1,-1", "--q", "10", "--x-lo", "5", "--x-hi", "50", "--m", "2"});
  REQUIRE(r.rc == kExitOk);
  const double m = std::stod(Json::parse(r.out)["metric"].get<std::string>());
  CHECK(m >= 0);
  CHECK(m <= 1);
  r = run({"similarity", "--k", "1", "--offset", "-10", "--q", "2", "--x-lo", "1", "--x-hi", "100"});
  CHECK(r.rc == kExitUsage);
  CHECK(r.err.find("pole") != std::string::npos);
}

TEST_CASE("QCALC_PRECISION_BITS sets the default precision") {
  setenv("QCALC_PRECISION_BITS", "128", 1);
  auto r = run({"eval", "e_q", "--x", "1"});
  CHECK(Json::parse(r.out)["config"]["precision_bits"] == 128);
  r = run({"eval", "e_q", "--x", "1", "--precision-bits", "300"});
  CHECK(Json::parse(r.out)["config"]["precision_bits"] == 300);
  setenv("QCALC_PRECISION_BITS", "lots", 1);
  CHECK(run({"eval", "e_q", "--x", "1"}).rc == kExitUsage);
  unsetenv("QCALC_PRECISION_BITS");
}
