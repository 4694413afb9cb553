#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>

#include "bpw/guards.hpp"
#include "bpw/wmod/commutator.hpp"

namespace bpw {

/// PBW-ordered word of creation modes; front acts last.
using Monomial = std::vector<BPMode>;
using Terms = std::map<Monomial, Scalar>;

inline long monomial_weight(const Monomial& m) {
  long w = 0;
  for (const auto& x : m) w -= x.shifted_degree();
  return w;
}

inline long monomial_charge(const Monomial& m) {
  long c = 0;
  for (const auto& x : m) c += x.charge();
  return c;
}

inline void add_into(Terms& into, const Terms& t, const Scalar& c = Scalar(1)) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : t) {
    Scalar s = v * c;
    auto [it, inserted] = into.emplace(m, s);
    if (!inserted) {
      it->second += s;
      if (it->second.is_zero()) into.erase(it);
    }
  }
}

/// Vacuum module of W^k or the Verma-type module on hwv(x, y).
class BPModule {
 public:
  static std::shared_ptr<const BPModule> vacuum(Level level, ResourceGuards guards = {}) {
    return std::shared_ptr<const BPModule>(new BPModule(std::move(level), std::nullopt, 0, guards));
  }
  /// gplus0_bound defaults to k+4 at integral levels, 4 otherwise.
  static std::shared_ptr<const BPModule> highest_weight(Level level, Weight w, std::optional<long> gplus0_bound = {},
                                                        ResourceGuards guards = {}) {
    long bound = gplus0_bound ? *gplus0_bound
                              : (level.positive_integer_regime() ? level.curve_count() + 2 : 4);
    return std::shared_ptr<const BPModule>(new BPModule(std::move(level), std::move(w), bound, guards));
  }

  const Level& level() const { return level_; }
  bool is_vacuum() const { return !hw_; }
  const Weight& highest_weight() const { return *hw_; }
  long gplus0_bound() const { return gplus0_bound_; }
  const ResourceGuards& guards() const { return guards_; }

  bool is_creation(const BPMode& m) const {
    switch (m.gen) {
      case BPGen::J: return m.index < 0;
      case BPGen::L: return hw_ ? m.index < 0 : m.index <= -2;
      case BPGen::Gplus:
      case BPGen::Gminus: return hw_ ? m.index <= 0 : m.index < 0;
      case BPGen::JJ: return false;
    }
    return false;
  }

  Terms act(const BPMode& x, const Terms& t, long depth = 0) const {
    guards_.check_depth(depth);
    if (x.gen == BPGen::JJ) return act_jj(x.index, t, depth);
    Terms out;
    for (const auto& [m, c] : t) add_into(out, act_mono(x, m, depth + 1), c);
    return out;
  }

  Terms apply(const ModeExpr& e, const Terms& t, long depth = 0) const {
    Terms out;
    for (const auto& [word, c] : e) {
      Terms cur = t;
      for (auto it = word.rbegin(); it != word.rend() && !cur.empty(); ++it) cur = act(*it, cur, depth + 1);
      add_into(out, cur, c);
    }
    return out;
  }

 private:
  BPModule(Level level, std::optional<Weight> hw, long bound, ResourceGuards guards)
      : level_(std::move(level)), hw_(std::move(hw)), gplus0_bound_(bound), guards_(guards) {}

  Terms head_action(const BPMode& x) const {
    Terms out;
    if (is_creation(x)) {
      out.emplace(Monomial{x}, Scalar(1));
      if (x == BPMode{BPGen::Gplus, 0} && gplus0_bound_ < 1) out.clear();
      return out;
    }
    if (hw_ && x.index == 0) {
      if (x.gen == BPGen::J && !hw_->x.is_zero()) out.emplace(Monomial{}, hw_->x);
      if (x.gen == BPGen::L) {
        Scalar l0 = hw_->y + hw_->x / Scalar(2);
        if (!l0.is_zero()) out.emplace(Monomial{}, l0);
      }
    }
    return out;
  }

  Terms act_mono(const BPMode& x, const Monomial& m, long depth) const {
    guards_.check_depth(depth);
    if (m.empty()) return head_action(x);
    auto key = std::make_pair(x, m);
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Terms out;
    if (is_creation(x) && !(m.front() < x)) {
      bool capped = false;
      if (x == BPMode{BPGen::Gplus, 0}) {
        long count = std::count(m.begin(), m.end(), x);
        capped = count + 1 > gplus0_bound_;
      }
      if (!capped) {
        Monomial n;
        n.reserve(m.size() + 1);
        n.push_back(x);
        n.insert(n.end(), m.begin(), m.end());
        out.emplace(std::move(n), Scalar(1));
      }
    } else {
      const BPMode& y = m.front();
      Monomial rest(m.begin() + 1, m.end());
      Terms rest_terms{{rest, Scalar(1)}};
      add_into(out, act(y, act_mono(x, rest, depth + 1), depth + 1));
      add_into(out, apply(commutator(level_, x, y), rest_terms, depth + 1));
    }
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), out);
    return out;
  }

  /// (J^2)_p as the normally ordered square; only finitely many terms act on t.
  Terms act_jj(long p, const Terms& t, long depth) const {
    if (t.empty()) return {};
    long d = 0;
    for (const auto& [m, c] : t) d = std::max(d, monomial_weight(m));
    Terms out;
    for (long j = p - d; j <= -1; ++j)
      add_into(out, act({BPGen::J, j}, act({BPGen::J, p - j}, t, depth + 1), depth + 1));
    for (long j = 0; j <= d; ++j)
      add_into(out, act({BPGen::J, p - j}, act({BPGen::J, j}, t, depth + 1), depth + 1));
    return out;
  }

  Level level_;
  std::optional<Weight> hw_;
  long gplus0_bound_;
  ResourceGuards guards_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<BPMode, Monomial>, Terms> memo_;
};

using ModulePtr = std::shared_ptr<const BPModule>;

/// Vector in a BPModule: Scalar combination of PBW monomials on the head.
class BPState {
 public:
  explicit BPState(ModulePtr module, Terms terms = {}) : module_(std::move(module)), terms_(std::move(terms)) {}

  /// The head vector (vacuum or hwv).
  static BPState head(ModulePtr module) { return BPState(std::move(module), Terms{{Monomial{}, Scalar(1)}}); }

  const ModulePtr& module() const { return module_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Shifted weights present (relative to the head).
  std::vector<long> weights() const {
    std::vector<long> w;
    for (const auto& [m, c] : terms_) w.push_back(monomial_weight(m));
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
  }
  long max_weight() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_weight(m));
    return d;
  }
  bool homogeneous() const {
    if (terms_.empty()) return true;
    long w = monomial_weight(terms_.begin()->first), q = monomial_charge(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (monomial_weight(m) != w || monomial_charge(m) != q) return false;
    return true;
  }
  long charge() const { return terms_.empty() ? 0 : monomial_charge(terms_.begin()->first); }

  BPState act(const BPMode& x) const { return BPState(module_, module_->act(x, terms_)); }
  BPState apply(const ModeExpr& e) const { return BPState(module_, module_->apply(e, terms_)); }
  /// Applies the word X1 ... Xr (Xr first).
  BPState apply_word(const std::vector<BPMode>& word) const {
    ModeExpr e;
    add_term(e, word, Scalar(1));
    return apply(e);
  }

  friend BPState operator+(const BPState& a, const BPState& b) {
    Terms t = a.terms_;
    add_into(t, b.terms_);
    return BPState(a.module_, std::move(t));
  }
  friend BPState operator-(const BPState& a, const BPState& b) { return a + b * Scalar(-1); }
  friend BPState operator*(const BPState& a, const Scalar& c) {
    Terms t;
    add_into(t, a.terms_, c);
    return BPState(a.module_, std::move(t));
  }
  friend bool operator==(const BPState& a, const BPState& b) { return a.terms_ == b.terms_; }

  /// Coefficient of a monomial (zero if absent).
  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    const char* head = module_->is_vacuum() ? "|0>" : "|x,y>";
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (const auto& x : m) out += "*" + x.str();
      out += head;
    }
    return out;
  }

 private:
  ModulePtr module_;
  Terms terms_;
};

/// X1^p1 ... applied to the head; convenience for building test states.
inline BPState power_state(const ModulePtr& module, const BPMode& x, long power) {
  BPState s = BPState::head(module);
  for (long i = 0; i < power; ++i) s = s.act(x);
  return s;
}

}  // namespace bpw
