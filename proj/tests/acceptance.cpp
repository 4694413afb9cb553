// One line per acceptance criterion. Every comparison is exact; the only
// tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bpw/suites/runner.hpp"
#include "support/fock_oracle.hpp"

using namespace bpw;

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  double seconds;
};

constexpr Budget kSingvec{60};
constexpr Budget kPhiMap{120};
constexpr Budget kDuality{120};
constexpr Budget kClassify{30};
constexpr Budget kOrbits{10};
constexpr Budget kDelta{10};
constexpr Budget kSugawara{60};
constexpr Budget kRelaxed{5};
constexpr Budget kAxioms{120};

constexpr int kMinAxiomInstances = 100;
constexpr int kOracleInstances = 150;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

Report run(const std::string& suite, std::optional<Rational> level = std::nullopt, bool symbolic = false) {
  return run_suite({suite, level, {}, symbolic, false});
}

long failed(const Report& r) {
  long n = 0;
  for (const auto& c : r.checks) n += c.status == CheckStatus::Fail;
  return n;
}

std::string tally(const Report& r) {
  return std::to_string(r.checks.size() - failed(r)) + "/" + std::to_string(r.checks.size());
}

bool has_passing(const Report& r, const std::string& id_prefix) {
  for (const auto& c : r.checks)
    if (c.id.rfind(id_prefix, 0) == 0 && c.status == CheckStatus::Pass) return true;
  return false;
}

void require_suite(Outcome& o, const Report& r, std::size_t min_checks) {
  o.require(r.passed(), r.suite + " has " + std::to_string(failed(r)) + " failing checks");
  o.require(r.checks.size() >= min_checks,
            r.suite + " has " + std::to_string(r.checks.size()) + " checks, needs " + std::to_string(min_checks));
}

Outcome criterion_singvec() {
  Outcome o;
  for (long k : {-1L, 0L, 1L}) {
    Report r = run("singvec", Rational(k));
    require_suite(o, r, 2);
    o.detail += (o.detail.empty() ? "" : ", ") + std::string("k=") + std::to_string(k) + " " + tally(r);
  }
  for (Rational k : {Rational(1, 2), Rational(2, 3)}) {
    Report r = run("singvec", k);
    o.require(!r.passed(), "negative control k=" + k.str() + " unexpectedly passes");
    o.detail += ", control k=" + k.str() + " " + tally(r);
  }
  return o;
}

Outcome criterion_phi_map() {
  Outcome o;
  Report r = run("phi-map", Rational(1));
  require_suite(o, r, 12);
  for (const char* id : {"tau+_(2)tau- = -2k'", "G+_(2)G- = 10", "G+_(1)G- = 6J", "G+_(0)G- = ", "T_(3)T = "})
    o.require(has_passing(r, id), std::string("missing ") + id);
  o.detail += tally(r);
  return o;
}

Outcome criterion_duality_map() {
  Outcome o;
  Report r = run("duality-map", Rational(1));
  require_suite(o, r, 10);
  for (const char* id : {"x(1)y = -5/2", "x(0)y = h", "e(0)f = h", "h(1)h = -5/2", "x(0)f = y", "e(0)y = -x",
                         "h(0)e = 2e", "h(0)f = -2f"})
    o.require(has_passing(r, id), std::string("missing ") + id);
  // Passing these requires a nonzero raw product that vanishes after reduction.
  o.require(has_passing(r, "x(0)e = 0 needs the (G)^3 relation"), "reduction control x(0)e");
  o.require(has_passing(r, "y(0)f = 0 needs the (G)^3 relation"), "reduction control y(0)f");
  o.detail += tally(r);
  return o;
}

Outcome criterion_classify_identities() {
  Outcome o;
  Report grid = run("classify-identities");
  Report sym = run("classify-identities", std::nullopt, true);
  require_suite(o, grid, 1);
  require_suite(o, sym, 1);
  o.detail += "grid " + tally(grid) + ", symbolic " + tally(sym);
  return o;
}

Outcome criterion_orbits() {
  Outcome o;
  Report r = run("orbits");
  require_suite(o, r, 1);
  for (long k = 1; k <= 4; ++k)
    o.require(has_passing(r, "psi-inverse vacuum k=" + std::to_string(k)), "psi-inverse vacuum k=" + std::to_string(k));
  o.detail += tally(r);
  return o;
}

Outcome criterion_delta_twisted() {
  Outcome o;
  Report r = run("delta-twisted");
  require_suite(o, r, 4);
  for (const char* id : {"Delta(alpha/2) omega_F = omega + alpha/2 z^-1 + 1/8 z^-2", "Delta(alpha/2) alpha = alpha + 1/2 z^-1",
                         "e^{Delta_z} omega_{F1/2} = omega + 1/16 z^-2", "C_{m,n} = -C_{n,m} for m,n <= 8"})
    o.require(has_passing(r, id), std::string("missing ") + id);
  o.detail += tally(r);
  return o;
}

Outcome criterion_sugawara() {
  Outcome o;
  Report r = run("sugawara");
  require_suite(o, r, 4);
  for (const char* id : {"omega_(3)omega = c/2 at symbolic k'", "central charge at k'=-5/4 is -5",
                         "witness singular at k'=-5/4 is true", "witness singular at k'=-7/6 is false"})
    o.require(has_passing(r, id), std::string("missing ") + id);
  o.detail += tally(r);
  return o;
}

Outcome criterion_relaxed() {
  Outcome o;
  Report r = run("relaxed-weights", Rational(1), true);
  require_suite(o, r, 14);
  o.require(has_passing(r, "untwisted-top on h_2"), "missing h_2 identity");
  o.require(has_passing(r, "twisted-top on h_1"), "missing h_1 identity");
  long lambdas = 0;
  for (const auto& c : r.checks) lambdas += c.id.rfind("predicates lambda=", 0) == 0;
  o.require(lambdas >= 12, "only " + std::to_string(lambdas) + " lambda values");
  o.detail += tally(r);
  return o;
}

Outcome criterion_engine_axioms() {
  Outcome o;
  Report r = run("engine-axioms");
  require_suite(o, r, 3);
  long instances = 0;
  for (const auto& c : r.checks) instances += std::stol(c.lhs);
  o.require(instances >= kMinAxiomInstances, "only " + std::to_string(instances) + " axiom instances");

  oracle::OracleOutcome neutral = oracle::run_fock_oracle(neutral_fermion_algebra(), oracle::neutral_fock(), 1, 11u,
                                                          kOracleInstances);
  oracle::OracleOutcome charged = oracle::run_fock_oracle(charged_fermion_algebra(), oracle::charged_fock(), 2, 12u,
                                                          kOracleInstances);
  for (const auto* f : {&neutral, &charged}) {
    o.require(f->failures == 0, "Fock oracle: " + f->first_failure);
    o.require(f->instances >= kMinAxiomInstances, "too few Fock oracle instances");
  }
  o.detail += std::to_string(instances) + " axiom instances, Fock oracle " +
              std::to_string(neutral.instances + charged.instances) + " products (" +
              std::to_string(neutral.nonzero + charged.nonzero) + " nonzero)";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  std::vector<SuiteDescriptor> runs;
  for (const auto& name : suite_names()) runs.push_back({name, std::nullopt, {}, false, false});
  runs.push_back({"singvec", Rational(1, 2), {}, false, false});
  runs.push_back({"classify-identities", std::nullopt, {}, true, false});
  for (const auto& d : runs) {
    std::string first = emit_report(run_suite(d));
    std::string second = emit_report(run_suite(d));
    o.require(first == second, d.name + " reports differ");
  }
  o.detail += std::to_string(runs.size()) + " suite configurations compared byte for byte";
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> body;
  std::optional<Budget> budget;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "vacuum singular vectors", criterion_singvec, kSingvec},
      {2, "phi-map relations", criterion_phi_map, kPhiMap},
      {3, "duality-map relations", criterion_duality_map, kDuality},
      {4, "classification identities", criterion_classify_identities, kClassify},
      {5, "orbit closed forms", criterion_orbits, kOrbits},
      {6, "Delta and twisted sector", criterion_delta_twisted, kDelta},
      {7, "Sugawara vector", criterion_sugawara, kSugawara},
      {8, "relaxed weights", criterion_relaxed, kRelaxed},
      {9, "engine axioms and Fock oracle", criterion_engine_axioms, kAxioms},
      {10, "determinism", criterion_determinism, std::nullopt},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.budget) o.require(secs < c.budget->seconds, "over the " + std::to_string(c.budget->seconds) + " s budget");
    failures += !o.pass;
    std::printf("criterion %2d %s  %s: %s [%.2f s]\n", c.number, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                secs);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
