#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bpw/exprio/report.hpp"
#include "bpw/ffield.hpp"
#include "bpw/suites/axioms.hpp"
#include "bpw/suites/classify_suites.hpp"
#include "bpw/wmod.hpp"

namespace bpw {

struct SuiteDescriptor {
  std::string name;
  std::optional<Rational> level;
  ResourceGuards guards;
  bool symbolic = false;
  bool timing = false;
};

namespace detail {

inline Level require_level(const SuiteDescriptor& d, long fallback) {
  return Level(Scalar(d.level.value_or(Rational(fallback))));
}

inline void require_k1(const SuiteDescriptor& d) {
  if (d.level && !(*d.level == Rational(1)))
    throw DomainError("suite '" + d.name + "' is defined at k = 1 only, got k = " + d.level->str());
}

inline std::vector<long> integral_levels(const SuiteDescriptor& d, std::vector<long> defaults) {
  if (!d.level) return defaults;
  Level L{Scalar(*d.level)};
  if (!L.positive_integer_regime())
    throw DomainError("suite '" + d.name + "' needs k+2 in Z>=1, got k = " + d.level->str());
  return {d.level->to_long()};
}

/// The largest weight of a pair of states multiplied by a fixed suite must fit the guard.
inline void require_weight(const SuiteDescriptor& d, long needed) {
  if (d.guards.max_weight < needed)
    throw ResourceGuardError("suite '" + d.name + "' multiplies states of total weight " + std::to_string(needed) +
                             ", above --max-weight " + std::to_string(d.guards.max_weight));
}

struct SuiteEntry {
  const char* name;
  std::function<std::vector<CheckResult>(const SuiteDescriptor&, std::string&)> run;
};

inline const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> table = {
      {"singvec",
       [](const SuiteDescriptor& d, std::string& level) {
         Level L = require_level(d, 1);
         if (!L.is_rational()) throw DomainError("singvec needs a rational level");
         level = L.k().str();
         return vacuum_singular_suite(L, d.guards);
       }},
      {"phi-map",
       [](const SuiteDescriptor& d, std::string& level) {
         require_k1(d);
         require_weight(d, 4);
         level = "1";
         return phi_map_suite();
       }},
      {"duality-map",
       [](const SuiteDescriptor& d, std::string& level) {
         require_k1(d);
         require_weight(d, 2);
         level = "1";
         return duality_map_suite();
       }},
      {"classify-identities",
       [](const SuiteDescriptor& d, std::string& level) {
         auto ks = integral_levels(d, {1, 2, 3});
         level = d.level ? d.level->str() : "1,2,3";
         return classify_identity_suite(ks, d.symbolic);
       }},
      {"orbits",
       [](const SuiteDescriptor& d, std::string& level) {
         auto ks = integral_levels(d, {1, 2, 3, 4});
         level = d.level ? d.level->str() : "1,2,3,4";
         return orbit_suite(ks);
       }},
      {"delta-twisted",
       [](const SuiteDescriptor&, std::string& level) {
         level = "none";
         return delta_twisted_suite();
       }},
      {"sugawara",
       [](const SuiteDescriptor&, std::string& level) {
         level = "none";
         return sugawara_suite();
       }},
      {"engine-axioms",
       [](const SuiteDescriptor&, std::string& level) {
         level = "none";
         return engine_axiom_suite();
       }},
      {"relaxed-weights",
       [](const SuiteDescriptor& d, std::string& level) {
         require_k1(d);
         level = "1";
         return relaxed_weight_suite(1, d.symbolic);
       }},
  };
  return table;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::suite_table()) out.emplace_back(e.name);
  return out;
}

/// Runs one named suite. Configuration and resource problems throw bpw::Error.
inline Report run_suite(const SuiteDescriptor& d) {
  for (const auto& e : detail::suite_table()) {
    if (d.name != e.name) continue;
    auto start = std::chrono::steady_clock::now();
    Report r{d.name, {}, {}, std::nullopt};
    r.add(e.run(d, r.level));
    if (d.timing)
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  std::string known;
  for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
  throw DomainError("unknown suite '" + d.name + "' (known: " + known + ")");
}

/// 0 when every check passes, 1 otherwise.
inline int exit_code(const Report& r) { return r.passed() ? 0 : 1; }

}  // namespace bpw
