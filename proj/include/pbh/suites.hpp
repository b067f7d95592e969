#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbh/example2.hpp"
#include "pbh/flag.hpp"
#include "pbh/report.hpp"

namespace pbh {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kEngineVersion = "pbh-verify 1.0.0";

struct SuiteConfig {
  std::string model = "torus";
  std::string suite = "parahyperkahler";
  SamplePlan plan{64, 42};
  std::map<std::string, double> tol;  // overrides keyed by "check" or "suite.check"
  Example2Params example2{1.25, 0.75, 0.0, "sin2", 0.1, 1e-3};
  FlagParams flag;
  std::string report_path;
};

struct CheckDef {
  std::string name;
  std::string statement;
  CheckKind kind = CheckKind::upper;
  double tolerance = 0.0;
};

struct SuiteInfo {
  std::string name;
  std::string description;
  std::vector<std::string> models;  // first entry is the default model
  std::vector<CheckDef> checks;
};

const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo& suite_info(const std::string& name);
std::vector<std::string> model_names();
std::vector<std::string> suite_names();  // catalog names plus "all"

// Rejects unknown names, invalid parameters and tightening tolerance overrides.
void validate(const SuiteConfig& c);
nlohmann::ordered_json config_echo(const SuiteConfig& c);

// Runs the configured suite (or every suite for "all"). Throws ConfigError for invalid
// configurations; model certification failures and check errors are recorded in the report.
// exit_code: 0 pass, 1 check failure, 3 model certification error.
VerificationReport run_suite(const SuiteConfig& c);
// Report for a rejected configuration (exit code 2, no suites).
VerificationReport config_error_report(const SuiteConfig& c, const std::string& message);

}  // namespace pbh
