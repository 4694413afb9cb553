#pragma once

#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bpw/error.hpp"

namespace bpw {

/// Process-wide registry of formal parameter names. The first five slots are
/// fixed so that term order does not depend on registration history:
/// k, kp (the osp level k'), lam, x, y. Further names are appended on demand.
class VariableRegistry {
 public:
  static constexpr unsigned k = 0;
  static constexpr unsigned kp = 1;
  static constexpr unsigned lam = 2;
  static constexpr unsigned x = 3;
  static constexpr unsigned y = 4;

  static VariableRegistry& instance() {
    static VariableRegistry registry;
    return registry;
  }

  unsigned index(std::string_view name) {
    std::lock_guard lock(mutex_);
    std::string key(name);
    if (key == "k'") key = "kp";
    if (auto it = by_name_.find(key); it != by_name_.end()) return it->second;
    if (key.empty() || !valid_identifier(key)) throw DomainError("invalid parameter name '" + key + "'");
    names_.push_back(key);
    unsigned id = static_cast<unsigned>(names_.size() - 1);
    by_name_.emplace(key, id);
    return id;
  }

  std::string name(unsigned id) const {
    std::lock_guard lock(mutex_);
    if (id >= names_.size()) throw DomainError("unknown parameter index " + std::to_string(id));
    return names_[id];
  }

  static bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    if (!alpha(s[0])) return false;
    for (char c : s)
      if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
    return true;
  }

 private:
  VariableRegistry() {
    for (const char* n : {"k", "kp", "lam", "x", "y"}) {
      by_name_.emplace(n, static_cast<unsigned>(names_.size()));
      names_.emplace_back(n);
    }
  }

  mutable std::mutex mutex_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, unsigned> by_name_;
};

inline unsigned var_index(std::string_view name) { return VariableRegistry::instance().index(name); }
inline std::string var_name(unsigned id) { return VariableRegistry::instance().name(id); }

}  // namespace bpw
