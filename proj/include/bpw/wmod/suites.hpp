#pragma once

#include "bpw/check.hpp"
#include "bpw/wmod/slices.hpp"

namespace bpw {

inline std::vector<CheckResult> vacuum_singular_suite(const Level& level, const ResourceGuards& guards = {}) {
  ModulePtr vac = BPModule::vacuum(level, guards);
  long n = lemma_power(level);
  std::vector<CheckResult> out;
  const std::pair<const char*, BPMode> vectors[] = {{"G+(-1)", {BPGen::Gplus, -1}}, {"G-(-2)", {BPGen::Gminus, -1}}};
  for (const auto& [label, mode] : vectors) {
    BPState v = power_state(vac, mode, n);
    SingularReport r = singular_check(v);
    std::string obstructed;
    for (const auto& o : r.obstructions) obstructed += (obstructed.empty() ? "" : ",") + o.mode.str();
    std::string bidegree = r.j0 ? "J0=" + r.j0->str() + " L(0)=" + r.l0_shifted->str() : "not an eigenvector";
    out.push_back(make_check(std::string("singular ") + label + "^" + std::to_string(n) + " at k=" + level.k().str(),
                             r.is_singular, obstructed.empty() ? "annihilated" : "obstructed by " + obstructed,
                             "annihilated", bidegree));
  }
  return out;
}

struct PowerFormula {
  BPState computed;
  BPState expected;
  bool matches() const { return computed == expected; }
};

/// G+_a (G-_{-1})^n 1 against its closed form, a in {1, 2}.
inline PowerFormula gplus_on_gminus_power(const Level& level, long a, long n) {
  if (n < 1) throw DomainError("power must be positive");
  if (a != 1 && a != 2) throw DomainError("closed forms exist for G+_1 and G+_2 only");
  ModulePtr vac = BPModule::vacuum(level);
  const Scalar& k = level.k();
  BPMode gm{BPGen::Gminus, -1};
  BPState computed = power_state(vac, gm, n).act({BPGen::Gplus, a});
  Scalar kn = k - Scalar(n - 2);
  BPState expected(vac);
  if (a == 2) {
    expected = power_state(vac, gm, n - 1) * (Scalar(2 * n) * kn * (kn + Scalar(n, 2)));
  } else {
    expected = power_state(vac, gm, n - 1).act({BPGen::J, -1}) * (Scalar(3 * n) * kn);
    if (n >= 2)
      expected = expected + power_state(vac, gm, n - 2).act({BPGen::Gminus, -2}) * (Scalar(n * (n - 1)) * kn);
  }
  return {computed, expected};
}

/// c with G-_1 (G+_0)^i hwv = c (G+_0)^{i-1} hwv.
inline Scalar top_pairing(const Level& level, const Weight& w, long i) {
  if (i < 1) throw DomainError("top_pairing needs i >= 1");
  ModulePtr mod = BPModule::highest_weight(level, w, std::max<long>(i, 4));
  BPMode g0{BPGen::Gplus, 0};
  BPState image = power_state(mod, g0, i).act({BPGen::Gminus, 1});
  BPState base = power_state(mod, g0, i - 1);
  Scalar c = image.coefficient(base.terms().begin()->first);
  if (!(image == base * c)) throw DomainError("G-_1 (G+_0)^i hwv left the G+_0 string");
  return c;
}

}  // namespace bpw
