#pragma once

#include <map>
#include <string>
#include <variant>

#include "bpw/exprio/expr.hpp"
#include "bpw/ffield/engine.hpp"

namespace bpw {

/// A state of the algebra, or a vector of a highest-weight module of its bp factor.
using ExprValue = std::variant<FState, BPState>;

namespace detail {

inline std::string at(const SourcePos& p) {
  return p.line ? std::to_string(p.line) + ":" + std::to_string(p.column) + ": " : std::string();
}

inline bool clifford(FactorKind k) { return k == FactorKind::CliffordNeutral || k == FactorKind::CliffordCharged; }

inline std::string bp_dsl_name(BPGen g) {
  switch (g) {
    case BPGen::J: return "J";
    case BPGen::L: return "T";
    case BPGen::Gplus: return "G+";
    case BPGen::Gminus: return "G-";
    default: throw UnknownGeneratorError("composite mode " + gen_name(g) + " has no DSL name");
  }
}

}  // namespace detail

/// Evaluates DSL expressions against a registered algebra.
class ExprEvaluator {
 public:
  explicit ExprEvaluator(AlgebraPtr alg) : alg_(std::move(alg)) {}

  ExprValue eval(const Expr& e) const { return eval(e, {}); }

  FState eval_state(const Expr& e) const {
    ExprValue v = eval(e);
    if (auto* s = std::get_if<FState>(&v)) return *s;
    throw ValidationError(detail::at(e.pos) + "expression lives in a highest-weight module, not in the algebra");
  }

 private:
  using Env = std::map<std::string, ExprValue>;
  AlgebraPtr alg_;

  [[noreturn]] static void invalid(const Expr& e, const std::string& msg) {
    throw ValidationError(detail::at(e.pos) + msg);
  }

  int factor_of(const Expr& e, const std::string& name) const {
    try {
      return alg_->spec().factor_index(name);
    } catch (const UnknownGeneratorError& err) {
      throw UnknownGeneratorError(detail::at(e.pos) + err.what());
    }
  }

  int generator_of(const Expr& e, int f, const std::string& gen) const {
    try {
      return alg_->factor(f).generator(gen);
    } catch (const UnknownGeneratorError& err) {
      throw UnknownGeneratorError(detail::at(e.pos) + err.what());
    }
  }

  static const FState& state(const Expr& e, const ExprValue& v) {
    if (auto* s = std::get_if<FState>(&v)) return *s;
    invalid(e, "n-th products need states of the algebra");
  }

  ExprValue eval(const Expr& e, const Env& env) const {
    switch (e.kind) {
      case ExprKind::Vacuum: return FState::vacuum(alg_);
      case ExprKind::Hwv: {
        int f = bp_factor_index(e);
        ModulePtr vac = alg_->factor(f).bp;
        return BPState::head(BPModule::highest_weight(vac->level(), {e.x, e.y}, std::nullopt, vac->guards()));
      }
      case ExprKind::Lattice: {
        for (int f = 0; f < alg_->size(); ++f)
          if (alg_->factor(f).kind == FactorKind::Lattice)
            return lattice_state(alg_, alg_->factor(f).name, e.index.to_long());
        invalid(e, "latt needs a lattice factor");
      }
      case ExprKind::Ident: {
        if (auto it = env.find(e.name); it != env.end()) return it->second;
        auto dot = e.name.find('.');
        if (dot == std::string::npos) invalid(e, "unbound identifier '" + e.name + "'");
        int f = factor_of(e, e.name.substr(0, dot));
        const Factor& fa = alg_->factor(f);
        generator_of(e, f, e.name.substr(dot + 1));
        if (fa.kind == FactorKind::Lattice && e.name.substr(dot + 1) != "phi") invalid(e, "unknown lattice generator");
        return generator_state(alg_, fa.name, e.name.substr(dot + 1));
      }
      case ExprKind::Mode: {
        int f = factor_of(e, e.factor);
        const Factor& fa = alg_->factor(f);
        Rational n = e.index;
        if (detail::clifford(fa.kind)) {
          if (n.is_integer()) invalid(e, "index parity: modes of Clifford factor '" + fa.name + "' take half-integer indices");
          n = n - Rational(1, 2);
        } else if (!n.is_integer()) {
          invalid(e, "index parity: modes of factor '" + fa.name + "' take integer indices");
        }
        int g = generator_of(e, f, e.name);
        ExprValue child = eval(e.args[0], env);
        if (auto* s = std::get_if<FState>(&child)) return s->act({f, g, n.to_long()});
        const BPState& b = std::get<BPState>(child);
        if (fa.kind != FactorKind::BPAbstract) invalid(e, "highest-weight vectors only carry modes of the bp factor");
        return b.act(detail::to_bp_mode(g, n.to_long()));
      }
      case ExprKind::NProd:
        return nth_product(state(e, eval(e.args[0], env)), e.index.to_long(), state(e, eval(e.args[1], env)));
      case ExprKind::NOp: return nop(state(e, eval(e.args[0], env)), state(e, eval(e.args[1], env)));
      case ExprKind::Deriv: return deriv(state(e, eval(e.args[0], env)));
      case ExprKind::Scale: {
        ExprValue v = eval(e.args[0], env);
        return std::visit([&](const auto& s) -> ExprValue { return s * e.x; }, v);
      }
      case ExprKind::Sum: {
        if (e.args.empty()) return FState(alg_);
        ExprValue acc = eval(e.args[0], env);
        for (std::size_t i = 1; i < e.args.size(); ++i) {
          ExprValue v = eval(e.args[i], env);
          if (acc.index() != v.index()) invalid(e.args[i], "sum mixes algebra states and module vectors");
          if (auto* s = std::get_if<FState>(&acc)) {
            acc = *s + std::get<FState>(v);
          } else {
            const BPState &a = std::get<BPState>(acc), &b = std::get<BPState>(v);
            if (a.module() != b.module() && !(a.module()->highest_weight() == b.module()->highest_weight()))
              invalid(e.args[i], "sum mixes different highest weights");
            acc = a + BPState(a.module(), b.terms());
          }
        }
        return acc;
      }
      case ExprKind::Let: {
        Env inner = env;
        inner.insert_or_assign(e.name, eval(e.args[0], env));
        return eval(e.args[1], inner);
      }
    }
    invalid(e, "unknown expression kind");
  }

  int bp_factor_index(const Expr& e) const {
    for (int f = 0; f < alg_->size(); ++f)
      if (alg_->factor(f).kind == FactorKind::BPAbstract) return f;
    invalid(e, "hwv needs a bp factor");
  }
};

inline ExprValue eval_expr(const AlgebraPtr& alg, const Expr& e) { return ExprEvaluator(alg).eval(e); }

namespace detail {

/// Nested mode applications whose leading term is the monomial m.
inline Expr monomial_expr(const Algebra& A, const TensorMonomial& m) {
  Expr e = Expr::vacuum();
  for (int f = 0; f < A.size(); ++f)
    if (A.factor(f).kind == FactorKind::Lattice && m[f].q != 0) {
      bool first = true;
      for (int g = 0; g < f; ++g) first = first && A.factor(g).kind != FactorKind::Lattice;
      if (!first) throw ValidationError("latt addresses only the first lattice factor");
      e = Expr::lattice(m[f].q);
    }
  for (int f = A.size() - 1; f >= 0; --f) {
    const Factor& fa = A.factor(f);
    const FWord& w = m[f].word;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (fa.kind == FactorKind::BPAbstract) {
        BPMode x{static_cast<BPGen>(it->first), it->second};
        long n = x.gen == BPGen::L ? x.index + 1 : x.index;
        e = Expr::mode(fa.name, bp_dsl_name(x.gen), Rational(n), std::move(e));
      } else {
        Rational n(it->second);
        if (clifford(fa.kind)) n = n + Rational(1, 2);
        e = Expr::mode(fa.name, fa.gens[it->first].name, n, std::move(e));
      }
    }
  }
  return e;
}

inline Expr bp_monomial_expr(const Monomial& m, const Weight& hw, const std::string& factor) {
  Expr e = Expr::hwv(hw.x, hw.y);
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    long n = it->gen == BPGen::L ? it->index + 1 : it->index;
    e = Expr::mode(factor, bp_dsl_name(it->gen), Rational(n), std::move(e));
  }
  return e;
}

inline Expr combine(std::vector<std::pair<Expr, Scalar>> terms) {
  std::vector<Expr> out;
  for (auto& [e, c] : terms) out.push_back(c == Scalar(1) ? std::move(e) : Expr::scale(c, std::move(e)));
  if (out.size() == 1) return std::move(out.front());
  return Expr::sum(std::move(out));
}

/// Solves for coefficients c_m with sum_m c_m eval(expr(m)) = target by
/// repeated correction; module ordering makes the system triangular.
template <class State, class MonoOf, class EvalOf>
Expr solve_expr(const State& target, const MonoOf& expr_of, const EvalOf& eval_of, const State& zero) {
  std::map<typename std::decay_t<decltype(target.terms())>::key_type, Scalar> coef;
  State residual = target;
  for (int round = 0; round < 64 && !residual.is_zero(); ++round) {
    for (const auto& [m, c] : residual.terms()) {
      State img = eval_of(expr_of(m));
      Scalar lead = img.coefficient(m);
      if (lead.is_zero()) throw ValidationError("cannot express monomial in the DSL");
      coef[m] = (coef.count(m) ? coef[m] : Scalar(0)) + c / lead;
    }
    State sum = zero;
    for (const auto& [m, c] : coef)
      if (!c.is_zero()) sum = sum + eval_of(expr_of(m)) * c;
    residual = target - sum;
  }
  if (!residual.is_zero()) throw ValidationError("DSL rendering did not converge");
  std::vector<std::pair<Expr, Scalar>> terms;
  for (const auto& [m, c] : coef)
    if (!c.is_zero()) terms.emplace_back(expr_of(m), c);
  return combine(std::move(terms));
}

}  // namespace detail

/// An expression evaluating exactly to s.
inline Expr state_expr(const FState& s) {
  const AlgebraPtr& A = s.algebra();
  ExprEvaluator ev(A);
  if (s.is_zero()) return Expr::sum({});
  return detail::solve_expr(
      s, [&](const TensorMonomial& m) { return detail::monomial_expr(*A, m); },
      [&](const Expr& e) { return ev.eval_state(e); }, FState(A));
}

inline Expr state_expr(const AlgebraPtr& alg, const BPState& s) {
  if (s.is_zero()) return Expr::sum({});
  std::string factor;
  for (int f = 0; f < alg->size(); ++f)
    if (alg->factor(f).kind == FactorKind::BPAbstract) factor = alg->factor(f).name;
  if (s.module()->is_vacuum()) return state_expr(bp_state(alg, factor, s));
  ExprEvaluator ev(alg);
  const Weight& hw = s.module()->highest_weight();
  return detail::solve_expr(
      s, [&](const Monomial& m) { return detail::bp_monomial_expr(m, hw, factor); },
      [&](const Expr& e) {
        BPState v = std::get<BPState>(ev.eval(e));
        return BPState(s.module(), v.terms());
      },
      BPState(s.module()));
}

inline std::string print_value(const AlgebraPtr& alg, const ExprValue& v) {
  if (auto* s = std::get_if<FState>(&v)) return print_expr(state_expr(*s));
  return print_expr(state_expr(alg, std::get<BPState>(v)));
}

}  // namespace bpw
