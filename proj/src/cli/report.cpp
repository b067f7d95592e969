#include "pbh/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pbh {

using ojson = nlohmann::ordered_json;

const char* to_string(CheckKind k) {
  switch (k) {
    case CheckKind::upper: return "upper";
    case CheckKind::lower: return "lower";
    case CheckKind::info: return "info";
  }
  return "?";
}

CheckKind check_kind_from(const std::string& s) {
  if (s == "upper") return CheckKind::upper;
  if (s == "lower") return CheckKind::lower;
  if (s == "info") return CheckKind::info;
  throw std::invalid_argument("unknown check kind " + s);
}

bool SuiteReport::pass() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool VerificationReport::pass() const {
  if (!error.empty()) return false;
  for (const auto& s : suites)
    if (!s.pass()) return false;
  return true;
}

namespace {

ojson check_json(const CheckRecord& c) {
  ojson j;
  j["name"] = c.name;
  j["statement"] = c.statement;
  j["kind"] = to_string(c.kind);
  j["max_residual"] = c.max_residual;
  j["tolerance"] = c.tolerance;
  j["points"] = c.points;
  j["inconclusive"] = c.inconclusive;
  j["pass"] = c.pass;
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

ojson report_json(const VerificationReport& r, bool with_time) {
  ojson j;
  j["engine"] = r.engine;
  j["config"] = r.config;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["exit_code"] = r.exit_code;
  if (!r.error.empty()) j["error"] = r.error;
  ojson suites = ojson::array();
  for (const auto& s : r.suites) {
    ojson sj;
    sj["suite"] = s.suite;
    sj["model"] = s.model;
    sj["verdict"] = s.pass() ? "pass" : "fail";
    if (!s.error.empty()) sj["error"] = s.error;
    ojson checks = ojson::array();
    for (const auto& c : s.checks) checks.push_back(check_json(c));
    sj["checks"] = std::move(checks);
    suites.push_back(std::move(sj));
  }
  j["suites"] = std::move(suites);
  if (with_time) j["wall_time_seconds"] = r.wall_time;
  return j;
}

void emit(const ojson& j, int indent, std::ostringstream& os) {
  const std::string pad(indent + 2, ' '), close(indent, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad << ojson(it.key()).dump() << ": ";
      emit(it.value(), indent + 2, os);
    }
    os << "\n" << close << "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    os << "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      emit(j[i], indent + 2, os);
    }
    os << "\n" << close << "]";
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
      os << "null";
    } else {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.16e", v);
      os << buf;
    }
  } else {
    os << j.dump();
  }
}

double number_or_nan(const ojson& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

}  // namespace

std::string to_json_text(const VerificationReport& r) {
  std::ostringstream os;
  emit(report_json(r, true), 0, os);
  os << "\n";
  return os.str();
}

std::string to_json_text_without_time(const VerificationReport& r) {
  std::ostringstream os;
  emit(report_json(r, false), 0, os);
  os << "\n";
  return os.str();
}

VerificationReport report_from_json_text(const std::string& text) {
  const ojson j = ojson::parse(text);
  VerificationReport r;
  r.engine = j.at("engine").get<std::string>();
  r.config = j.at("config");
  r.exit_code = j.at("exit_code").get<int>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("wall_time_seconds")) r.wall_time = number_or_nan(j.at("wall_time_seconds"));
  for (const auto& sj : j.at("suites")) {
    SuiteReport s;
    s.suite = sj.at("suite").get<std::string>();
    s.model = sj.at("model").get<std::string>();
    if (sj.contains("error")) s.error = sj.at("error").get<std::string>();
    for (const auto& cj : sj.at("checks")) {
      CheckRecord c;
      c.name = cj.at("name").get<std::string>();
      c.statement = cj.at("statement").get<std::string>();
      c.kind = check_kind_from(cj.at("kind").get<std::string>());
      c.max_residual = number_or_nan(cj.at("max_residual"));
      c.tolerance = number_or_nan(cj.at("tolerance"));
      c.points = cj.at("points").get<int>();
      c.inconclusive = cj.at("inconclusive").get<int>();
      c.pass = cj.at("pass").get<bool>();
      if (cj.contains("error")) c.error = cj.at("error").get<std::string>();
      s.checks.push_back(std::move(c));
    }
    r.suites.push_back(std::move(s));
  }
  return r;
}

std::string text_summary(const VerificationReport& r) {
  std::ostringstream os;
  if (!r.error.empty()) os << "error: " << r.error << "\n";
  for (const auto& s : r.suites) {
    os << "suite " << s.suite << " (model " << s.model << "): " << (s.pass() ? "PASS" : "FAIL") << "\n";
    if (!s.error.empty()) os << "  error: " << s.error << "\n";
    for (const auto& c : s.checks) {
      char buf[256];
      const char* rel = c.kind == CheckKind::upper ? "<=" : c.kind == CheckKind::lower ? ">=" : "  ";
      std::snprintf(buf, sizeof buf, "  [%s] %-34s %.3e %s %.1e  (%d points", c.pass ? "pass" : "FAIL",
                    c.name.c_str(), c.max_residual, rel, c.tolerance, c.points);
      os << buf;
      if (c.inconclusive) os << ", " << c.inconclusive << " inconclusive";
      os << ")";
      if (c.kind == CheckKind::info) os << " info";
      if (!c.error.empty()) os << "  error: " << c.error;
      os << "\n";
    }
  }
  os << "verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace pbh
