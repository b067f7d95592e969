#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pbh {

// upper: pass iff residual <= tolerance; lower: pass iff residual >= tolerance; info: always passes.
enum class CheckKind { upper, lower, info };
const char* to_string(CheckKind k);
CheckKind check_kind_from(const std::string& s);

struct CheckRecord {
  std::string name;
  std::string statement;
  CheckKind kind = CheckKind::upper;
  double max_residual = 0.0;
  double tolerance = 0.0;
  int points = 0;
  int inconclusive = 0;
  bool pass = false;
  std::string error;  // set when the check could not be evaluated
};

struct SuiteReport {
  std::string suite, model;
  std::vector<CheckRecord> checks;
  std::string error;
  bool pass() const;
};

struct VerificationReport {
  std::string engine;
  nlohmann::ordered_json config;
  std::vector<SuiteReport> suites;
  int exit_code = 0;
  std::string error;  // configuration error; no suites run
  double wall_time = 0.0;
  bool pass() const;
};

// JSON text with every floating-point value written as %.16e (17 significant digits);
// NaN and infinities are written as null.
std::string to_json_text(const VerificationReport& r);
VerificationReport report_from_json_text(const std::string& text);
// Same document without the wall-time field, for replay comparison.
std::string to_json_text_without_time(const VerificationReport& r);

std::string text_summary(const VerificationReport& r);

}  // namespace pbh
