#pragma once

#include <map>
#include <string>

#include "bpw/ffield/engine.hpp"

namespace bpw {

/// Finite Laurent expansion in z with rational exponents.
class LaurentState {
 public:
  explicit LaurentState(AlgebraPtr alg) : alg_(std::move(alg)) {}

  void add(const Rational& power, const FState& s) {
    auto it = coeffs_.find(power);
    FState sum = it == coeffs_.end() ? s : it->second + s;
    if (sum.is_zero())
      coeffs_.erase(power);
    else
      coeffs_.insert_or_assign(power, std::move(sum));
  }

  /// Coefficient of z^power.
  FState at(const Rational& power) const {
    auto it = coeffs_.find(power);
    return it == coeffs_.end() ? FState(alg_) : it->second;
  }

  const std::map<Rational, FState>& coefficients() const { return coeffs_; }

  friend bool operator==(const LaurentState& a, const LaurentState& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (const auto& [p, s] : a.coeffs_)
      if (!(b.at(p) == s)) return false;
    return true;
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "[" + it->second.str() + "]z^" + it->first.str();
    }
    return s;
  }

 private:
  AlgebraPtr alg_;
  std::map<Rational, FState> coeffs_;
};

namespace detail {

inline long max_weight_floor(const FState& a) {
  long top = 0;
  for (long w : a.weights2()) top = std::max(top, w);
  return top / 2 + 1;
}

}  // namespace detail

/// Delta(h,z)a = z^{h_0} exp(sum_{k>=1} (-1)^{k+1}/k h_(k) z^{-k}) a.
inline LaurentState delta_op(const FState& h, const FState& a) {
  const AlgebraPtr& alg = h.algebra();
  FState vac = FState::vacuum(alg);
  for (long n = 0; n <= 4; ++n) {
    FState hh = nth_product(h, n, h);
    bool ok = n == 1 ? (hh == vac * hh.vacuum_coefficient()) : hh.is_zero();
    if (!ok) throw ValidationError("h_(" + std::to_string(n) + ")h = " + hh.str() + " violates the Heisenberg condition");
  }
  long reach = detail::max_weight_floor(a);
  // Each h_(k) with k >= 1 lowers the weight by k; integer powers of z^{-1}.
  std::map<long, FState> series{{0, a}};
  for (long k = 1; k <= reach; ++k) {
    Scalar c = Scalar(k % 2 ? 1 : -1) / Scalar(k);
    std::map<long, FState> next;
    for (const auto& [deg, s] : series) {
      FState cur = s;
      Scalar coef(1);
      for (long r = 0; !cur.is_zero() && deg + k * r <= reach; ++r) {
        auto it = next.find(deg + k * r);
        FState term = cur * coef;
        if (it == next.end())
          next.emplace(deg + k * r, term);
        else
          it->second = it->second + term;
        cur = nth_product(h, k, cur);
        coef = coef * c / Scalar(r + 1);
      }
    }
    series = std::move(next);
  }
  LaurentState out(alg);
  for (const auto& [deg, s] : series)
    for (const auto& [m, coef] : s.terms()) {
      FState mono(alg, FTerms{{m, Scalar(1)}});
      FState h0 = nth_product(h, 0, mono);
      Scalar lambda = h0.coefficient(m);
      if (!(h0 == mono * lambda)) throw ValidationError("h_(0) is not semisimple on " + mono.str());
      if (!lambda.is_rational()) throw ValidationError("h_(0) eigenvalue " + lambda.str() + " is not a number");
      out.add(lambda.rational() - Rational(deg), mono * coef);
    }
  return out;
}

/// Coefficient of Phi(m+1/2)Phi(n+1/2) z^{-m-n-1} in the twisted correction.
struct TwistedCoeff {
  long m = 0;
  long n = 0;
  Rational value;

  static TwistedCoeff at(long m, long n) {
    if (m < 0 || n < 0) throw DomainError("twisted coefficients are indexed by non-negative integers");
    Rational v = Rational(1, 2) * Rational(m - n, m + n + 1) * binom_rational(Rational(-1, 2), static_cast<unsigned>(m)) *
                 binom_rational(Rational(-1, 2), static_cast<unsigned>(n));
    return {m, n, v};
  }
};

/// e^{Delta_z} s for s in the neutral Clifford factor `factor`.
inline LaurentState twisted_correction(const FState& s, std::string_view factor = "Fhalf") {
  const AlgebraPtr& alg = s.algebra();
  int f = alg->spec().factor_index(factor);
  if (alg->factor(f).kind != FactorKind::CliffordNeutral)
    throw ValidationError("twisted correction needs a neutral Clifford factor");
  long reach = detail::max_weight_floor(s);
  auto delta = [&](const FState& v, long total) {
    // Part of Delta_z lowering the weight by `total` = m+n+1.
    FState out(alg);
    for (long m = 0; m < total; ++m) {
      long n = total - 1 - m;
      TwistedCoeff c = TwistedCoeff::at(m, n);
      if (c.value == Rational(0)) continue;
      out = out + v.act({f, 0, n}).act({f, 0, m}) * Scalar(c.value * Rational(1, 2));
    }
    return out;
  };
  // e^{Delta} = sum_r Delta^r / r!, tracked by z-degree.
  std::map<long, FState> power{{0, s}};
  std::map<long, FState> total{{0, s}};
  for (long r = 1; r <= reach && !power.empty(); ++r) {
    std::map<long, FState> next;
    for (const auto& [deg, v] : power)
      for (long d = 1; deg + d <= reach; ++d) {
        FState img = delta(v, d) * Scalar(1, r);
        if (img.is_zero()) continue;
        auto it = next.find(deg + d);
        if (it == next.end())
          next.emplace(deg + d, img);
        else
          it->second = it->second + img;
      }
    for (const auto& [deg, v] : next) {
      auto it = total.find(deg);
      if (it == total.end())
        total.emplace(deg, v);
      else
        it->second = it->second + v;
    }
    power = std::move(next);
  }
  LaurentState out(alg);
  for (const auto& [deg, v] : total) out.add(Rational(-deg), v);
  return out;
}

/// Top of a Ramond module of the neutral fermion: Phi(0) acts by sign/sqrt(2);
/// only Phi(0)^2 = 1/2 enters exact computations.
struct RamondTop {
  int sign = 1;
  static Rational phi0_squared() { return Rational(1, 2); }
  std::string label() const { return sign > 0 ? "M+" : "M-"; }
};

}  // namespace bpw
