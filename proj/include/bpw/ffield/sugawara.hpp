#pragma once

#include <string>
#include <vector>

#include "bpw/ffield/engine.hpp"

namespace bpw {

/// Sugawara vector of the affine osp(1|2) factor.
inline FState sugawara(const AlgebraPtr& alg, std::string_view factor) {
  int f = alg->spec().factor_index(factor);
  const Factor& fa = alg->factor(f);
  if (fa.kind != FactorKind::AffineSuper) throw ValidationError("Sugawara needs an affine factor");
  Scalar denom = Scalar(2) * fa.level + Scalar(3);
  if (denom.is_zero()) throw SingularLevelError("Sugawara construction is undefined at k' = -3/2");
  auto g = [&](const char* n) { return generator_state(alg, factor, n); };
  FState e = g("e"), ff = g("f"), h = g("h"), x = g("x"), y = g("y");
  FState sum = nop(e, ff) + nop(ff, e) + nop(h, h) * Scalar(1, 2) - nop(x, y) * Scalar(1, 2) + nop(y, x) * Scalar(1, 2);
  return sum * denom.inverse();
}

/// c = 2k'/(2k'+3).
inline Scalar sugawara_central_charge(const Scalar& kp) {
  Scalar denom = Scalar(2) * kp + Scalar(3);
  if (denom.is_zero()) throw SingularLevelError("Sugawara construction is undefined at k' = -3/2");
  return Scalar(2) * kp / denom;
}

/// omega - (:xy: - 1/2 Dh); singular exactly at the level where the Sugawara
/// vector agrees with the free-field one.
inline FState sugawara_witness(const AlgebraPtr& alg, std::string_view factor) {
  auto g = [&](const char* n) { return generator_state(alg, factor, n); };
  return sugawara(alg, factor) - (nop(g("x"), g("y")) - deriv(g("h")) * Scalar(1, 2));
}

struct SingularStateReport {
  bool singular = false;
  bool has_vacuum_component = false;
  std::vector<std::string> obstructions;
};

/// Singular for the affine factor: every positive mode of every generator, up to
/// the weight of the state, annihilates it, and it has no vacuum component.
inline SingularStateReport singular_state_check(const FState& s, std::string_view factor) {
  const AlgebraPtr& alg = s.algebra();
  int f = alg->spec().factor_index(factor);
  const Factor& fa = alg->factor(f);
  SingularStateReport r;
  r.has_vacuum_component = !s.vacuum_coefficient().is_zero();
  long top = 0;
  for (long w : s.weights2()) top = std::max(top, (w + 1) / 2);
  for (int g = 0; g < static_cast<int>(fa.gens.size()); ++g)
    for (long n = 1; n <= std::max<long>(top, 1); ++n) {
      FState image = s.act({f, g, n});
      if (!image.is_zero()) r.obstructions.push_back(fa.gens[g].name + "_(" + std::to_string(n) + ")");
    }
  r.singular = !s.is_zero() && !r.has_vacuum_component && r.obstructions.empty();
  return r;
}

}  // namespace bpw
