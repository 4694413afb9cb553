#pragma once

#include "bpw/classify/curves.hpp"

namespace bpw {

enum class RelaxedSector { UntwistedTop, TwistedTop };

struct RelaxedParams {
  Scalar lambda;
  RelaxedSector sector = RelaxedSector::UntwistedTop;

  /// h-perp(0) shifts, fixed by lambda and k.
  static Scalar delta(const Level& level, const Scalar& lambda) { return level.k() - Scalar(2) * lambda; }
  static Scalar delta_prime(const Level& level, const Scalar& lambda) {
    return Scalar(1, 2) + level.k() - Scalar(2) * lambda;
  }
};

inline Weight relaxed_weight(const Level& level, const RelaxedParams& p) {
  Scalar t = -level.k() + Scalar(2) * p.lambda;
  if (p.sector == RelaxedSector::UntwistedTop)
    return {Scalar(-2, 3) * t, Scalar(-1, 4) + t * t / Scalar(3) + t / Scalar(3)};
  Scalar four_t = Scalar(4) * t;
  return {Scalar(5, 6) - Scalar(2, 3) * t, (four_t - Scalar(5)) * (four_t + Scalar(5)) / Scalar(48)};
}

/// Curve carrying relaxed weights of the given sector.
inline CurveIndex relaxed_curve(RelaxedSector s) { return CurveIndex(s == RelaxedSector::UntwistedTop ? 2 : 1); }

struct IrreducibilityPredicates {
  bool F_irred;
  bool E0_irred;
  bool E1_irred;
  friend bool operator==(const IrreducibilityPredicates&, const IrreducibilityPredicates&) = default;
};

inline IrreducibilityPredicates irreducibility_predicates(const Rational& lambda) {
  auto integral = [](const Rational& r) { return r.is_integer(); };
  bool f = !integral(Rational(2) * (lambda - Rational(1, 8)));
  bool e0 = !integral(lambda) && !integral(lambda + Rational(1, 4));
  Rational s = lambda + Rational(1, 2);
  bool e1 = !integral(s) && !integral(s + Rational(1, 4));
  return {f, e0, e1};
}

}  // namespace bpw
