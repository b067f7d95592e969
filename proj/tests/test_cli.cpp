#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "pbh/suites.hpp"

using namespace pbh;

namespace {

SuiteConfig small(const std::string& suite) {
  SuiteConfig c;
  c.suite = suite;
  c.plan = {6, 42};
  return c;
}

const CheckRecord& find(const SuiteReport& s, const std::string& name) {
  for (const auto& c : s.checks)
    if (c.name == name) return c;
  throw std::runtime_error("missing check " + name);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run(const std::string& args) {
  const int st = std::system((std::string(VERIFY_BIN) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("catalog names and the parahyperkahler suite size") {
  const auto names = suite_names();
  CHECK(names.size() == 8);
  CHECK(names.back() == "all");
  CHECK(suite_info("parahyperkahler").checks.size() == 4);
  CHECK_THROWS_AS(suite_info("lemma2"), ConfigError);
}

TEST_CASE("report survives a JSON round trip") {
  VerificationReport r = run_suite(small("parahyperkahler"));
  CHECK(r.exit_code == 0);
  CHECK(r.suites.size() == 1);
  CHECK(r.suites[0].checks.size() == 4);
  r.suites[0].checks[0].max_residual = 1.0 / 3.0;
  r.suites[0].checks[1].max_residual = std::nan("");
  r.suites[0].checks[2].error = "synthetic";
  const std::string text = to_json_text(r);
  const VerificationReport back = report_from_json_text(text);
  CHECK(to_json_text(back) == text);
  CHECK(back.suites[0].checks[0].max_residual == 1.0 / 3.0);
  CHECK(std::isnan(back.suites[0].checks[1].max_residual));
  CHECK(back.suites[0].checks[2].error == "synthetic");
  CHECK(text.find("3.3333333333333331e-01") != std::string::npos);
}

TEST_CASE("tolerance overrides may only loosen") {
  SuiteConfig c = small("poisson");
  c.tol["pi_type20"] = 1e-8;
  c.tol["poisson.chern_holomorphic"] = 1e-7;
  CHECK_NOTHROW(validate(c));
  const VerificationReport r = run_suite(c);
  CHECK(find(r.suites[0], "pi_type20").tolerance == 1e-8);
  CHECK(find(r.suites[0], "chern_holomorphic").tolerance == 1e-7);

  SuiteConfig t = small("poisson");
  t.tol["pi_type20"] = 1e-12;
  CHECK_THROWS_AS(validate(t), ConfigError);
  t.tol = {{"gpk_clauses", 1e-15}};
  CHECK_THROWS_AS(validate(t), ConfigError);
  t.tol = {{"no_such_check", 1.0}};
  CHECK_THROWS_AS(validate(t), ConfigError);
  t.tol = {{"levi_civita_control", 1.0}};
  CHECK_THROWS_AS(validate(t), ConfigError);
  t.tol = {{"rk4_halving", 9.0}};  // lower bound: raising it tightens
  CHECK_THROWS_AS(validate(t), ConfigError);
  t.tol = {{"rk4_halving", 4.0}};
  CHECK_NOTHROW(validate(t));
}

TEST_CASE("invalid configurations are rejected before any computation") {
  SuiteConfig c = small("poisson");
  c.model = "sphere";
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c.model = "flag";
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c = small("gpk-example2");
  c.example2.b = 0.5;
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c = small("theorem4");
  c.model = "flag";
  c.flag = {1, 1};
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c = small("gpk-example2");
  c.example2.hamiltonian = "cubic";
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c.example2.hamiltonian = "gauss";
  c.example2.step = 0.0;
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  const VerificationReport e = config_error_report(c, "bad step");
  CHECK(e.exit_code == 2);
  CHECK_FALSE(e.pass());
  CHECK(report_from_json_text(to_json_text(e)).error == "bad step");
}

TEST_CASE("undeformed data make the Lee-form checks inconclusive and the suite fail") {
  SuiteConfig c = small("engel");
  c.example2.t = 0.0;
  const VerificationReport r = run_suite(c);
  CHECK(r.exit_code == 1);
  const CheckRecord& b = find(r.suites[0], "basis");
  CHECK_FALSE(b.pass);
  CHECK(b.inconclusive == 6);
  CHECK(find(r.suites[0], "degenerate_lee_inconclusive").pass);
}

TEST_CASE("suites on a model they do not support fall back to their default under 'all'") {
  SuiteConfig c = small("all");
  c.model = "flag";
  c.plan.count = 2;
  const VerificationReport r = run_suite(c);
  CHECK(r.suites.size() == 7);
  for (const auto& s : r.suites) CHECK(s.model == (s.suite == "theorem4" ? "flag" : "torus"));
  CHECK(r.exit_code == 0);
}

TEST_CASE("command line: exit codes, config file precedence and seed fallback") {
  const std::string dir = "cli_test_tmp";
  std::filesystem::create_directories(dir);
  CHECK(run("--suite parahyperkahler --samples 4") == 0);
  CHECK(run("--suite nope") == 2);
  CHECK(run("--suite poisson --tol pi_type20=1e-13") == 2);
  CHECK(run("--suite poisson --tol pi_type20") == 2);
  CHECK(run("--suite engel --t 0 --samples 3") == 1);
  CHECK(run("--bogus-flag") == 2);

  {
    std::ofstream cfg(dir + "/run.cfg");
    cfg << "suite = lemma1\nsamples = 5\nseed = 7\na = 1.25\n";
  }
  CHECK(run("--config " + dir + "/run.cfg --samples 3 --report " + dir + "/a.json") == 0);
  const VerificationReport a = report_from_json_text(slurp(dir + "/a.json"));
  CHECK(a.config["suite"] == "lemma1");
  CHECK(a.config["samples"] == 3);
  CHECK(a.config["seed"] == 7);

  CHECK(std::system(("PBH_SEED=9 " + std::string(VERIFY_BIN) + " --suite lemma1 --samples 2 --report " + dir +
                     "/b.json > /dev/null")
                        .c_str()) == 0);
  CHECK(report_from_json_text(slurp(dir + "/b.json")).config["seed"] == 9);
  CHECK(std::system(("PBH_SEED=9 " + std::string(VERIFY_BIN) + " --suite lemma1 --samples 2 --seed 5 --report " + dir +
                     "/c.json > /dev/null")
                        .c_str()) == 0);
  CHECK(report_from_json_text(slurp(dir + "/c.json")).config["seed"] == 5);

  CHECK(run("--a 2 --report " + dir + "/d.json") == 2);
  const VerificationReport d = report_from_json_text(slurp(dir + "/d.json"));
  CHECK(d.exit_code == 2);
  CHECK_FALSE(d.error.empty());
}
