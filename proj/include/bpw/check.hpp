#pragma once

#include <string>
#include <vector>

namespace bpw {

/// One verified identity: both sides serialized, plus a short note.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
  std::string note;
};

inline CheckResult make_check(std::string name, bool pass, std::string lhs, std::string rhs, std::string note = {}) {
  return {std::move(name), pass, std::move(lhs), std::move(rhs), std::move(note)};
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace bpw
