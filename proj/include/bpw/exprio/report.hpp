#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bpw/check.hpp"
#include "bpw/error.hpp"

namespace bpw {

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

inline CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "skipped") return CheckStatus::Skipped;
  throw ValidationError("unknown check status '" + s + "'");
}

struct ReportCheck {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  std::string lhs;
  std::string rhs;
  std::string detail;
  friend bool operator==(const ReportCheck&, const ReportCheck&) = default;
};

struct Report {
  std::string suite;
  std::string level;
  std::vector<ReportCheck> checks;
  std::optional<long> elapsed_ms;  // only emitted on request; never part of the compared content

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }

  /// Appends results, making ids unique by suffixing repeats with #2, #3, ...
  void add(const std::vector<CheckResult>& results) {
    std::set<std::string> seen;
    for (const auto& c : checks) seen.insert(c.id);
    for (const auto& r : results) {
      std::string id = r.name;
      for (int n = 2; seen.count(id); ++n) id = r.name + "#" + std::to_string(n);
      seen.insert(id);
      checks.push_back({id, r.pass ? CheckStatus::Pass : CheckStatus::Fail, r.lhs, r.rhs, r.note});
    }
  }

  friend bool operator==(const Report&, const Report&) = default;
};

inline nlohmann::json report_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"status", status_name(c.status)}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"detail", c.detail}});
  nlohmann::json j = {{"suite", r.suite}, {"level", r.level}, {"checks", checks}};
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

/// Deterministic text: sorted keys, two-space indent, trailing newline.
inline std::string emit_report(const Report& r) { return report_json(r).dump(2) + "\n"; }

inline Report read_report(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what(), 1, e.byte);
  }
  try {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.level = j.at("level").get<std::string>();
    std::set<std::string> ids;
    for (const auto& c : j.at("checks")) {
      ReportCheck rc{c.at("id").get<std::string>(), parse_status(c.at("status").get<std::string>()),
                     c.at("lhs").get<std::string>(), c.at("rhs").get<std::string>(), c.at("detail").get<std::string>()};
      if (!ids.insert(rc.id).second) throw ValidationError("duplicate check id '" + rc.id + "'");
      r.checks.push_back(std::move(rc));
    }
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<long>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace bpw
