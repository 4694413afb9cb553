#pragma once

#include <optional>
#include <vector>

#include "bpw/error.hpp"
#include "bpw/exact.hpp"

namespace bpw {

/// Level k of W^k; rational or symbolic.
class Level {
 public:
  explicit Level(Scalar k) : k_(std::move(k)) {}
  static Level symbolic() { return Level(Scalar::variable(VariableRegistry::k)); }

  const Scalar& k() const { return k_; }
  bool is_rational() const { return k_.is_rational(); }

  /// k + 2 is a positive integer.
  bool positive_integer_regime() const {
    if (!k_.is_rational()) return false;
    Rational kk = k_.rational() + Rational(2);
    return kk.is_integer() && kk.sign() > 0;
  }

  /// k + 2 as an integer; throws unless positive_integer_regime().
  long curve_count() const {
    if (!k_.is_rational()) throw DomainError("symbolic level has no curve count");
    if (!positive_integer_regime())
      throw DomainError("level " + k_.str() + " is outside the regime k+2 in Z>=1");
    return (k_.rational() + Rational(2)).to_long();
  }

  /// k + 3, rejecting the singular level.
  Scalar k_plus_3() const {
    Scalar s = k_ + Scalar(3);
    if (s.is_zero()) throw SingularLevelError("level k = -3 is singular");
    return s;
  }

  /// (2k+3)/3, the spectral-flow charge shift.
  Scalar flow_shift() const { return (Scalar(2) * k_ + Scalar(3)) / Scalar(3); }

 private:
  Scalar k_;
};

struct Weight {
  Scalar x;
  Scalar y;
  friend bool operator==(const Weight&, const Weight&) = default;
  std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

inline Weight symbolic_weight() {
  return {Scalar::variable(VariableRegistry::x), Scalar::variable(VariableRegistry::y)};
}

/// Positive curve index i.
class CurveIndex {
 public:
  explicit CurveIndex(long i) : i_(i) {
    if (i < 1) throw DomainError("curve index must be >= 1, got " + std::to_string(i));
  }
  long value() const { return i_; }
  friend auto operator<=>(const CurveIndex&, const CurveIndex&) = default;

 private:
  long i_;
};

inline Scalar eval_g(const Level& level, const Weight& w) {
  const Scalar& k = level.k();
  return -(Scalar(3) * w.x * w.x - (Scalar(2) * k + Scalar(3)) * w.x - (k + Scalar(3)) * w.y);
}

/// Expanded h_i with i allowed to be any scalar (symbolic j in factorization checks).
inline Scalar eval_h(const Scalar& i, const Level& level, const Weight& w) {
  const Scalar &k = level.k(), &x = w.x, &y = w.y;
  return -i * i + k * i - Scalar(3) * x * i + Scalar(3) * i - Scalar(3) * x * x - k + Scalar(2) * k * x +
         Scalar(6) * x + k * y + Scalar(3) * y - Scalar(2);
}

inline Scalar eval_h(CurveIndex i, const Level& level, const Weight& w) {
  return eval_h(Scalar(i.value()), level, w);
}

/// (1/i) sum_{j<i} g(x+j, y).
inline Scalar h_average(CurveIndex i, const Level& level, const Weight& w) {
  Scalar total;
  for (long j = 0; j < i.value(); ++j) total += eval_g(level, {w.x + Scalar(j), w.y});
  return total / Scalar(i.value());
}

inline std::vector<long> witnesses_in_Sk(const Level& level, const Weight& w) {
  if (!level.is_rational()) throw DomainError("witnesses_in_Sk needs a rational level");
  long top = level.curve_count();
  std::vector<long> out;
  for (long i = 1; i <= top; ++i)
    if (eval_h(CurveIndex(i), level, w).is_zero()) out.push_back(i);
  return out;
}

/// The unique y with h_i(x, y) = 0; h_i has y-coefficient k+3.
inline Scalar curve_solve_y(CurveIndex i, const Level& level, const Scalar& x) {
  Scalar k3 = level.k_plus_3();
  Scalar rest = eval_h(i, level, {x, Scalar(0)});
  return -rest / k3;
}

inline Weight sflow_weight(const Level& level, const Weight& w, const Scalar& i) {
  Scalar xh = w.x + i - Scalar(1) - level.flow_shift();
  return {xh, w.y - xh};
}

inline Weight sflow_weight(const Level& level, const Weight& w, CurveIndex i) {
  return sflow_weight(level, w, Scalar(i.value()));
}

/// Inverse of sflow_weight for a given top dimension i of the preimage.
inline Weight sflow_weight_inverse(const Level& level, const Weight& w, const Scalar& i) {
  Scalar x = w.x - i + Scalar(1) + level.flow_shift();
  return {x, w.y + w.x};
}

inline bool check_lemma_ij(const Level& level, CurveIndex i, const Weight& w) {
  if (!level.is_rational()) throw DomainError("check_lemma_ij needs a rational level");
  Rational j = level.k().rational() + Rational(3) - Rational(i.value());
  if (!j.is_integer() || j < Rational(1))
    throw DomainError("dual index k+3-i = " + j.str() + " is not a positive integer");
  return eval_h(i, level, w) == eval_h(CurveIndex(j.to_long()), level, sflow_weight(level, w, i));
}

struct TopDim {
  std::optional<long> dim;
  bool multi_witness = false;
};

/// Smallest witness; flags weights lying on several curves.
inline TopDim top_dim(const Level& level, const Weight& w) {
  auto ws = witnesses_in_Sk(level, w);
  if (ws.empty()) return {};
  return {ws.front(), ws.size() > 1};
}

}  // namespace bpw
