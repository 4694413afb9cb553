#pragma once

#include <random>
#include <string>
#include <vector>

#include "bpw/check.hpp"
#include "bpw/ffield.hpp"

namespace bpw {

/// Draws random homogeneous PBW monomials of an algebra.
struct StateSampler {
  std::string label;
  AlgebraPtr alg;
  std::vector<FMode> creation;
  std::vector<long> charges;  // lattice sectors to seed with
  int lattice = -1;

  FState draw(std::mt19937& rng, long max_weight2) const {
    std::uniform_int_distribution<int> len(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, creation.size() - 1);
    for (;;) {
      FState s = FState::vacuum(alg);
      if (lattice >= 0) {
        std::uniform_int_distribution<std::size_t> q(0, charges.size() - 1);
        s = lattice_state(alg, alg->factor(lattice).name, charges[q(rng)]);
      }
      int n = len(rng);
      for (int i = 0; i < n; ++i) s = s.act(creation[pick(rng)]);
      if (s.is_zero()) continue;
      auto it = s.terms().begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, s.terms().size() - 1)(rng));
      if (alg->weight2(it->first) <= max_weight2) return FState(alg, FTerms{{it->first, Scalar(1)}});
    }
  }

  bool odd(const FState& s) const { return alg->odd(s.terms().begin()->first); }
};

inline StateSampler affine_fermion_sampler() {
  StateSampler s{"osp(1|2) at k'=-5/4 x F", osp_F_algebra(Scalar(-5, 4)), {}, {}, -1};
  for (int g = 0; g < 5; ++g)
    for (long n : {-1, -2}) s.creation.push_back({0, g, n});
  for (int g = 0; g < 2; ++g)
    for (long n : {-1, -2}) s.creation.push_back({1, g, n});
  return s;
}

inline StateSampler lattice_sampler() {
  return {"F_{-1}", Algebra::create({"F-1", {lattice_factor("L", -1)}}), {{0, 0, -1}, {0, 0, -2}}, {-1, 0, 1}, 0};
}

inline StateSampler heisenberg_fermion_sampler() {
  StateSampler s{"heisenberg(3/2) x F^{1/2}",
                 Algebra::create({"HxFhalf", {heisenberg_factor("H", Scalar(3, 2)), clifford_neutral_factor("Fhalf")}}),
                 {},
                 {},
                 -1};
  for (long n : {-1, -2, -3}) {
    s.creation.push_back({0, 0, n});
    s.creation.push_back({1, 0, n});
  }
  return s;
}

struct AxiomTally {
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

/// Borcherds commutator, translation, vacuum, skew-symmetry, grading and charge on random triples.
inline AxiomTally check_axioms(const StateSampler& s, unsigned seed, int instances) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> idx(-2, 2);
  const AlgebraPtr& A = s.alg;
  FState vac = FState::vacuum(A);
  auto sign = [](bool odd) { return odd ? Scalar(-1) : Scalar(1); };
  AxiomTally t;
  for (int i = 0; i < instances; ++i) {
    FState a = s.draw(rng, 4), b = s.draw(rng, 4), c = s.draw(rng, 2);
    long m = idx(rng), n = idx(rng);
    std::string tag = " a=" + a.str() + " b=" + b.str() + " c=" + c.str() + " m=" + std::to_string(m) +
                      " n=" + std::to_string(n);
    bool pab = s.odd(a) && s.odd(b);
    ++t.instances;
    FState lhs = nth_product(a, m, nth_product(b, n, c)) - nth_product(b, n, nth_product(a, m, c)) * sign(pab);
    FState rhs(A);
    for (long j = 0; j <= 8; ++j) rhs = rhs + nth_product(nth_product(a, j, b), m + n - j, c) * Scalar(binom_int(m, j));
    t.record(lhs == rhs, "commutator" + tag);
    t.record(nth_product(deriv(a), n, b) == nth_product(a, n - 1, b) * Scalar(-n), "translation" + tag);
    bool vac_ok = nth_product(a, -1, vac) == a && nth_product(vac, -1, a) == a;
    for (long k = 0; k <= 2; ++k) vac_ok = vac_ok && nth_product(a, k, vac).is_zero();
    t.record(vac_ok, "vacuum" + tag);
    FState skew(A);
    Scalar fact(1);
    for (long j = 0; j <= 10; ++j) {
      FState term = nth_product(b, n + j, a);
      for (long d = 0; d < j; ++d) term = deriv(term);
      if (j > 0) fact = fact * Scalar(j);
      skew = skew + term * (Scalar((n + j) % 2 ? -1 : 1) / fact);
    }
    FState ab = nth_product(a, n, b);
    t.record(ab == skew * (sign(pab) * Scalar(-1)), "skew-symmetry" + tag);
    long want = A->weight2(a.terms().begin()->first) + A->weight2(b.terms().begin()->first) - 2 * n - 2;
    auto qa = A->charges(a.terms().begin()->first), qb = A->charges(b.terms().begin()->first);
    bool graded = true;
    for (const auto& [mono, coef] : ab.terms()) {
      graded = graded && A->weight2(mono) == want;
      auto q = A->charges(mono);
      for (std::size_t k = 0; k < q.size(); ++k) graded = graded && q[k] == qa[k] + qb[k];
    }
    t.record(graded, "grading" + tag);
  }
  return t;
}

/// One check per sampled algebra; instances split evenly, at least 100 in total.
inline std::vector<CheckResult> engine_axiom_suite(unsigned seed = 2024u, int instances = 120) {
  std::vector<CheckResult> out;
  const StateSampler samplers[] = {affine_fermion_sampler(), lattice_sampler(), heisenberg_fermion_sampler()};
  int per = (std::max(instances, 3) + 2) / 3;
  unsigned offset = 0;
  for (const auto& s : samplers) {
    AxiomTally t = check_axioms(s, seed + offset++, per);
    out.push_back(make_check("axioms on " + s.label, t.failures == 0, std::to_string(t.instances) + " instances",
                             "0 failures", t.failures ? t.first_failure : std::to_string(t.failures) + " failures"));
  }
  return out;
}

}  // namespace bpw
