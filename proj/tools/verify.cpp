// Command-line front end for the verification suites.
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pbh/suites.hpp"

namespace {

void print_catalog() {
  for (const pbh::SuiteInfo& s : pbh::suite_catalog()) {
    std::string models;
    for (const auto& m : s.models) models += (models.empty() ? "" : ",") + m;
    std::printf("%-16s [%s] %s\n", s.name.c_str(), models.c_str(), s.description.c_str());
  }
  std::printf("%-16s runs every suite above\n", "all");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify pseudo-bihermitian and generalized pseudo-Kaehler identities on model manifolds"};
  pbh::SuiteConfig cfg;
  std::vector<std::string> tols;
  bool list = false;

  app.set_config("--config", "", "flat key = value file; command-line flags take precedence");
  app.add_option("--model", cfg.model, "torus, kodaira or flag")->capture_default_str();
  app.add_option("--suite", cfg.suite, "suite name or 'all'")->capture_default_str();
  app.add_option("--samples", cfg.plan.count, "sample points per check")->capture_default_str();
  app.add_option("--seed", cfg.plan.seed, "sampler seed")->envname("PBH_SEED")->capture_default_str();
  app.add_option("--tol", tols, "tolerance override <check>=<value> or <suite>.<check>=<value>");
  app.add_option("--a", cfg.example2.a)->capture_default_str();
  app.add_option("--b", cfg.example2.b)->capture_default_str();
  app.add_option("--c", cfg.example2.c)->capture_default_str();
  app.add_option("--f-expr", cfg.example2.hamiltonian, "Hamiltonian: const, sin2, gauss")->capture_default_str();
  app.add_option("--t", cfg.example2.t, "flow time of the Hamiltonian deformation")->capture_default_str();
  app.add_option("--step", cfg.example2.step, "RK4 step")->capture_default_str();
  app.add_option("--fa", cfg.flag.a, "flag form coefficient a")->capture_default_str();
  app.add_option("--fb", cfg.flag.b, "flag form coefficient b")->capture_default_str();
  app.add_option("--report", cfg.report_path, "write the JSON report here");
  app.add_flag("--list-suites", list, "print the suite catalog and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (list) {
    print_catalog();
    return 0;
  }

  pbh::VerificationReport rep;
  try {
    for (const std::string& t : tols) {
      const auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) throw pbh::ConfigError("tolerance override '" + t + "' is not <check>=<value>");
      std::size_t used = 0;
      const std::string num = t.substr(eq + 1);
      double v = 0.0;
      try {
        v = std::stod(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != num.size()) throw pbh::ConfigError("tolerance override '" + t + "' has no numeric value");
      cfg.tol[t.substr(0, eq)] = v;
    }
    rep = pbh::run_suite(cfg);
    std::cout << pbh::text_summary(rep);
  } catch (const pbh::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    rep = pbh::config_error_report(cfg, e.what());
  }
  if (!cfg.report_path.empty()) {
    std::ofstream out(cfg.report_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << cfg.report_path << "\n";
      return 2;
    }
    out << pbh::to_json_text(rep);
  }
  return rep.exit_code;
}
