#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bpw/ffield/algebra.hpp"
#include "bpw/guards.hpp"

namespace bpw {

/// (generator, VA mode index). For the bp factor the pair is (BPGen, wmod index).
using FWord = std::vector<std::pair<int, long>>;

struct FactorPart {
  FWord word;
  long q = 0;  // lattice charge
  bool empty() const { return word.empty() && q == 0; }
  friend auto operator<=>(const FactorPart&, const FactorPart&) = default;
};

using TensorMonomial = std::vector<FactorPart>;
using FTerms = std::map<TensorMonomial, Scalar>;

/// Mode X_(n) of generator `gen` in factor `factor`.
struct FMode {
  int factor = 0;
  int gen = 0;
  long n = 0;
};

namespace detail {

inline void fadd(FTerms& into, const TensorMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = into.find(m);
  if (it == into.end()) {
    into.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

inline void fadd(FTerms& into, const FTerms& t, const Scalar& c = Scalar(1)) {
  for (const auto& [m, v] : t) fadd(into, m, v * c);
}

using WordTerms = std::map<FWord, Scalar>;

inline void wadd(WordTerms& into, const FWord& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = into.find(w);
  if (it == into.end()) {
    into.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

inline BPMode to_bp_mode(int gen, long n) {
  switch (gen) {
    case 0: return {BPGen::J, n};
    case 1: return {BPGen::L, n - 1};
    case 2: return {BPGen::Gplus, n};
    case 3: return {BPGen::Gminus, n};
  }
  throw UnknownGeneratorError("bp factor has generators J, T, G+, G- only");
}

inline Monomial to_monomial(const FWord& w) {
  Monomial m;
  for (const auto& [g, n] : w) m.push_back({static_cast<BPGen>(g), n});
  return m;
}

inline FWord from_monomial(const Monomial& m) {
  FWord w;
  for (const auto& x : m) w.push_back({static_cast<int>(x.gen), x.index});
  return w;
}

}  // namespace detail

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A validated tensor product together with its operation caches.
class Algebra {
 public:
  static AlgebraPtr create(AlgebraSpec spec, ResourceGuards guards = {}) {
    if (spec.factors.empty()) throw ValidationError("algebra needs at least one factor");
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      validate_factor(spec.factors[i]);
      for (std::size_t j = 0; j < i; ++j)
        if (spec.factors[i].name == spec.factors[j].name)
          throw ValidationError("duplicate factor name '" + spec.factors[i].name + "'");
    }
    return AlgebraPtr(new Algebra(std::move(spec), guards));
  }

  const AlgebraSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  const Factor& factor(int i) const { return spec_.factors.at(static_cast<std::size_t>(i)); }
  int size() const { return static_cast<int>(spec_.factors.size()); }
  const ResourceGuards& guards() const { return guards_; }

  TensorMonomial vacuum() const { return TensorMonomial(spec_.factors.size()); }

  FMode mode(std::string_view factor_name, std::string_view gen, long n) const {
    int f = spec_.factor_index(factor_name);
    return {f, factor(f).generator(gen), n};
  }

  // ---- grading and parity ----

  bool part_odd(int f, const FactorPart& p) const {
    const Factor& fa = factor(f);
    if (fa.kind == FactorKind::BPAbstract) return false;
    if (fa.kind == FactorKind::Lattice) return ((fa.lattice_N() * p.q * p.q) % 2) != 0;
    bool odd = false;
    for (const auto& [g, n] : p.word) odd ^= fa.gens[g].odd;
    return odd;
  }

  bool odd(const TensorMonomial& m) const {
    bool o = false;
    for (int f = 0; f < size(); ++f) o ^= part_odd(f, m[f]);
    return o;
  }

  /// Twice the weight of a part.
  long part_weight2(int f, const FactorPart& p) const {
    const Factor& fa = factor(f);
    if (fa.kind == FactorKind::BPAbstract) return 2 * monomial_weight(detail::to_monomial(p.word));
    long w = 0;
    if (fa.kind == FactorKind::Lattice) {
      w = fa.lattice_N() * p.q * p.q;
      for (const auto& [g, n] : p.word) w += -2 * n;
      return w;
    }
    for (const auto& [g, n] : p.word) w += fa.gens[g].weight2 - 2 * n - 2;
    return w;
  }

  long weight2(const TensorMonomial& m) const {
    long w = 0;
    for (int f = 0; f < size(); ++f) w += part_weight2(f, m[f]);
    return w;
  }

  /// Twice the lowest weight in the sector with the given lattice charges.
  long min_weight2(const std::vector<long>& charges) const {
    long w = 0;
    for (int f = 0; f < size(); ++f)
      if (factor(f).kind == FactorKind::Lattice) w += factor(f).lattice_N() * charges[f] * charges[f];
    return w;
  }

  std::vector<long> charges(const TensorMonomial& m) const {
    std::vector<long> q;
    for (const auto& p : m) q.push_back(p.q);
    return q;
  }

  // ---- actions ----

  FTerms act(const FMode& x, const TensorMonomial& m) const {
    const Factor& fa = factor(x.factor);
    if (x.gen < 0 || x.gen >= static_cast<int>(fa.gens.size()))
      throw UnknownGeneratorError("generator index out of range in factor '" + fa.name + "'");
    bool xodd = fa.gens[x.gen].odd;
    return lift(x.factor, xodd, m, part_act(x, m[x.factor]));
  }

  FTerms act(const FMode& x, const FTerms& t) const {
    FTerms out;
    for (const auto& [m, c] : t) detail::fadd(out, act(x, m), c);
    return out;
  }

  /// (e^{p phi})_(n) on a monomial, p the lattice charge of the vertex operator.
  FTerms vertex_act(int f, long p, long n, const TensorMonomial& m) const {
    const Factor& fa = factor(f);
    if (fa.kind != FactorKind::Lattice) throw ValidationError("factor '" + fa.name + "' is not a lattice factor");
    bool vodd = ((fa.lattice_N() * p * p) % 2) != 0;
    return lift(f, vodd, m, lattice_vertex(fa.lattice_N(), p, n, m[f]));
  }

  /// a_(n)c on monomials.
  FTerms nprod(const TensorMonomial& a, long n, const TensorMonomial& c, long depth = 0) const {
    guards_.check_depth(depth);
    auto key = std::make_tuple(a, n, c);
    {
      std::lock_guard lock(mutex_);
      auto it = nprod_cache_.find(key);
      if (it != nprod_cache_.end()) return it->second;
    }
    FTerms out = nprod_uncached(a, n, c, depth);
    std::lock_guard lock(mutex_);
    nprod_cache_.emplace(std::move(key), out);
    return out;
  }

  /// Largest p with x_(p)y possibly nonzero.
  long max_product_index(long wx2, long wy2, const std::vector<long>& qsum) const {
    long top = wx2 + wy2 - min_weight2(qsum) - 2;
    return top >= 0 ? top / 2 : (top - 1) / 2;
  }

  std::string part_str(int f, const FactorPart& p) const {
    const Factor& fa = factor(f);
    std::string s;
    auto sep = [&] {
      if (!s.empty()) s += " ";
    };
    if (fa.kind == FactorKind::BPAbstract) {
      for (const auto& x : detail::to_monomial(p.word)) {
        sep();
        s += fa.name + "." + x.str();
      }
      return s;
    }
    for (const auto& [g, n] : p.word) {
      sep();
      s += fa.name + "." + fa.gens[g].name + "_(" + std::to_string(n) + ")";
    }
    if (p.q != 0) {
      sep();
      s += fa.name + ".e^{" + std::to_string(p.q) + "}";
    }
    return s;
  }

  std::string monomial_str(const TensorMonomial& m) const {
    std::string s;
    for (int f = 0; f < size(); ++f) {
      std::string p = part_str(f, m[f]);
      if (p.empty()) continue;
      s += (s.empty() ? "" : " ") + p;
    }
    return s.empty() ? "1" : s;
  }

 private:
  Algebra(AlgebraSpec spec, ResourceGuards guards) : spec_(std::move(spec)), guards_(guards) {}

  /// Places part-level results back into the tensor monomial with the Koszul sign.
  FTerms lift(int f, bool xodd, const TensorMonomial& m, const std::map<FactorPart, Scalar>& parts) const {
    bool before = false;
    if (xodd)
      for (int i = 0; i < f; ++i) before ^= part_odd(i, m[i]);
    Scalar sign = before ? Scalar(-1) : Scalar(1);
    FTerms out;
    for (const auto& [p, c] : parts) {
      TensorMonomial r = m;
      r[f] = p;
      detail::fadd(out, r, c * sign);
    }
    return out;
  }

  std::map<FactorPart, Scalar> part_act(const FMode& x, const FactorPart& p) const {
    const Factor& fa = factor(x.factor);
    std::map<FactorPart, Scalar> out;
    if (fa.kind == FactorKind::BPAbstract) {
      Terms t = fa.bp->act(detail::to_bp_mode(x.gen, x.n), Terms{{detail::to_monomial(p.word), Scalar(1)}});
      for (const auto& [mono, c] : t) out.emplace(FactorPart{detail::from_monomial(mono), 0}, c);
      return out;
    }
    if (fa.kind == FactorKind::Lattice) {
      for (const auto& [w, c] : heisenberg_act(fa.lattice_N(), x.n, p.word, p.q)) out.emplace(FactorPart{w, p.q}, c);
      return out;
    }
    for (const auto& [w, c] : lie_act(x.factor, {x.gen, x.n}, p.word, 0)) out.emplace(FactorPart{w, 0}, c);
    return out;
  }

  // ---- Lie-type factors ----

  /// [X, Y} as a list of modes with coefficients; a mode with gen -1 is the identity.
  std::vector<std::pair<std::pair<int, long>, Scalar>> bracket(int f, std::pair<int, long> X,
                                                               std::pair<int, long> Y) const {
    const Factor& fa = factor(f);
    std::map<std::pair<int, long>, Scalar> acc;
    long m = X.second;
    for (int j = 0; j <= fa.max_j(); ++j) {
      const OpeValue* v = fa.ope_at(X.first, Y.first, j);
      if (!v) continue;
      Scalar b(binom_int(m, j));
      if (b.is_zero()) continue;
      long idx = m + Y.second - j;
      for (const auto& [g, c] : v->gens) acc[{g, idx}] += b * c;
      if (!v->vac.is_zero() && idx == -1) acc[{-1, 0}] += b * v->vac;
    }
    std::vector<std::pair<std::pair<int, long>, Scalar>> out;
    for (const auto& [k, c] : acc)
      if (!c.is_zero()) out.emplace_back(k, c);
    return out;
  }

  detail::WordTerms lie_act(int f, std::pair<int, long> X, const FWord& w, long depth) const {
    guards_.check_depth(depth);
    auto key = std::make_tuple(f, X, w);
    {
      std::lock_guard lock(mutex_);
      auto it = lie_cache_.find(key);
      if (it != lie_cache_.end()) return it->second;
    }
    detail::WordTerms out = lie_act_uncached(f, X, w, depth);
    std::lock_guard lock(mutex_);
    lie_cache_.emplace(std::move(key), out);
    return out;
  }

  detail::WordTerms lie_apply_bracket(int f, const std::vector<std::pair<std::pair<int, long>, Scalar>>& br,
                                      const FWord& w, long depth) const {
    detail::WordTerms out;
    for (const auto& [mode, c] : br) {
      if (mode.first < 0) {
        detail::wadd(out, w, c);
        continue;
      }
      for (const auto& [u, d] : lie_act(f, mode, w, depth + 1)) detail::wadd(out, u, c * d);
    }
    return out;
  }

  detail::WordTerms lie_act_uncached(int f, std::pair<int, long> X, const FWord& w, long depth) const {
    const Factor& fa = factor(f);
    bool creation = X.second < 0;
    detail::WordTerms out;
    if (w.empty()) {
      if (creation) out.emplace(FWord{X}, Scalar(1));
      return out;
    }
    const auto& Y = w.front();
    FWord rest(w.begin() + 1, w.end());
    bool xodd = fa.gens[X.first].odd;
    if (creation && X < Y) {
      FWord r = w;
      r.insert(r.begin(), X);
      out.emplace(std::move(r), Scalar(1));
      return out;
    }
    if (creation && X == Y) {
      if (!xodd) {
        FWord r = w;
        r.insert(r.begin(), X);
        out.emplace(std::move(r), Scalar(1));
        return out;
      }
      for (const auto& [u, c] : lie_apply_bracket(f, bracket(f, X, X), rest, depth))
        detail::wadd(out, u, c * Scalar(1, 2));
      return out;
    }
    Scalar sign = (xodd && fa.gens[Y.first].odd) ? Scalar(-1) : Scalar(1);
    for (const auto& [u, c] : lie_act(f, X, rest, depth + 1))
      for (const auto& [v, d] : lie_act(f, Y, u, depth + 1)) detail::wadd(out, v, sign * c * d);
    for (const auto& [u, c] : lie_apply_bracket(f, bracket(f, X, Y), rest, depth)) detail::wadd(out, u, c);
    return out;
  }

  // ---- lattice factor ----

  static detail::WordTerms heisenberg_act(long N, long n, const FWord& w, long q) {
    detail::WordTerms out;
    if (n < 0) {
      FWord r = w;
      r.insert(std::upper_bound(r.begin(), r.end(), std::pair<int, long>{0, n}), {0, n});
      out.emplace(std::move(r), Scalar(1));
    } else if (n == 0) {
      if (q != 0) out.emplace(w, Scalar(N * q));
    } else {
      auto it = std::find(w.begin(), w.end(), std::pair<int, long>{0, -n});
      if (it != w.end()) {
        long r = std::count(w.begin(), w.end(), std::pair<int, long>{0, -n});
        FWord u = w;
        u.erase(u.begin() + (it - w.begin()));
        out.emplace(std::move(u), Scalar(r * N * n));
      }
    }
    return out;
  }

  static long heisenberg_weight(const FWord& w) {
    long s = 0;
    for (const auto& [g, n] : w) s -= n;
    return s;
  }

  /// Multiplies a z-series of Heisenberg states by exp(c phi_(m) z^{dir*m}), truncated at |degree| <= bound.
  static std::map<long, detail::WordTerms> exp_series(long N, const std::map<long, detail::WordTerms>& in, long m,
                                                      const Scalar& c, long bound) {
    std::map<long, detail::WordTerms> out;
    for (const auto& [deg, terms] : in) {
      detail::WordTerms cur = terms;
      Scalar coef(1);
      for (long r = 0; !cur.empty(); ++r) {
        long d = deg + std::abs(m) * r;
        if (d > bound) break;
        for (const auto& [w, v] : cur) detail::wadd(out[d], w, v * coef);
        detail::WordTerms next;
        for (const auto& [w, v] : cur)
          for (const auto& [u, x] : heisenberg_act(N, m, w, 0)) detail::wadd(next, u, v * x);
        cur = std::move(next);
        coef = coef * c / Scalar(r + 1);
      }
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
  }

  static std::map<FactorPart, Scalar> lattice_vertex(long N, long p, long n, const FactorPart& part) {
    std::map<FactorPart, Scalar> out;
    if (p == 0) {
      if (n == -1) out.emplace(part, Scalar(1));
      return out;
    }
    long wt = heisenberg_weight(part.word);
    // E+ = exp(-sum_m p phi_(m) z^{-m} / m): keyed by b, the power of z^{-1}.
    std::map<long, detail::WordTerms> plus{{0, {{part.word, Scalar(1)}}}};
    for (long m = 1; m <= wt; ++m) plus = exp_series(N, plus, m, Scalar(-p, m), wt);
    long shift = N * p * part.q;
    for (const auto& [b, states] : plus) {
      long a = -n - 1 - shift + b;
      if (a < 0) continue;
      // E- = exp(sum_m p phi_(-m) z^m / m): coefficient of z^a.
      std::map<long, detail::WordTerms> minus{{0, states}};
      for (long m = 1; m <= a; ++m) minus = exp_series(N, minus, -m, Scalar(p, m), a);
      auto it = minus.find(a);
      if (it == minus.end()) continue;
      for (const auto& [w, c] : it->second) {
        FactorPart r{w, part.q + p};
        auto found = out.find(r);
        if (found == out.end())
          out.emplace(std::move(r), c);
        else {
          found->second += c;
          if (found->second.is_zero()) out.erase(found);
        }
      }
    }
    return out;
  }

  // ---- n-th products ----

  struct Peeled {
    bool atom = false;
    FMode mode;
    long charge = 0;
    long m = -1;
    TensorMonomial v;
    long u_weight2 = 0;
    bool u_odd = false;
  };

  Peeled peel(const TensorMonomial& a) const {
    for (int f = 0; f < size(); ++f) {
      const FactorPart& p = a[f];
      if (p.empty()) continue;
      const Factor& fa = factor(f);
      Peeled out;
      out.v = a;
      if (fa.kind == FactorKind::Lattice && p.word.empty()) {
        out.atom = true;
        out.mode.factor = f;
        out.charge = p.q;
        out.m = -1;
        out.v[f] = FactorPart{};
        out.u_weight2 = fa.lattice_N() * p.q * p.q;
        out.u_odd = part_odd(f, p);
        return out;
      }
      auto [g, idx] = p.word.front();
      out.v[f].word.erase(out.v[f].word.begin());
      if (fa.kind == FactorKind::BPAbstract) {
        BPGen bg = static_cast<BPGen>(g);
        int gen = bg == BPGen::J ? 0 : bg == BPGen::L ? 1 : bg == BPGen::Gplus ? 2 : 3;
        out.mode = {f, gen, bg == BPGen::L ? idx + 1 : idx};
        out.m = out.mode.n;
        out.u_weight2 = fa.gens[gen].weight2;
        return out;
      }
      out.mode = {f, g, idx};
      out.m = idx;
      out.u_weight2 = fa.gens[g].weight2;
      out.u_odd = fa.gens[g].odd;
      return out;
    }
    throw ValidationError("cannot peel the vacuum");
  }

  FTerms u_act(const Peeled& u, long k, const TensorMonomial& c) const {
    if (u.atom) return vertex_act(u.mode.factor, u.charge, k, c);
    return act(FMode{u.mode.factor, u.mode.gen, k}, c);
  }

  FTerms u_act(const Peeled& u, long k, const FTerms& t) const {
    FTerms out;
    for (const auto& [m, c] : t) detail::fadd(out, u_act(u, k, m), c);
    return out;
  }

  std::vector<long> add_charges(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<long> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
  }

  FTerms nprod_uncached(const TensorMonomial& a, long n, const TensorMonomial& c, long depth) const {
    FTerms out;
    if (a == vacuum()) {
      if (n == -1) out.emplace(c, Scalar(1));
      return out;
    }
    long wa = weight2(a), wc = weight2(c);
    if (n > max_product_index(wa, wc, add_charges(charges(a), charges(c)))) return out;
    Peeled u = peel(a);
    if (u.v == vacuum() && u.m == -1) {
      // a = u_(-1) 1, so a_(n) = u_(n).
      return u_act(u, n, c);
    }
    const TensorMonomial& v = u.v;
    long m = u.m;
    long wv = weight2(v);
    std::vector<long> qu = charges(a), qv = charges(v), qc = charges(c);
    for (std::size_t i = 0; i < qu.size(); ++i) qu[i] -= qv[i];
    long jmax = std::max(max_product_index(wv, wc, add_charges(qv, qc)) - n,
                         max_product_index(u.u_weight2, wc, add_charges(qu, qc)));
    bool vodd = odd(v);
    Scalar second_sign = (((m % 2) != 0) != (u.u_odd && vodd)) ? Scalar(1) : Scalar(-1);
    for (long j = 0; j <= jmax; ++j) {
      Scalar b(binom_int(m, j));
      if (j % 2) b = -b;
      // u_(m-j)(v_(n+j)c)
      FTerms vc = nprod(v, n + j, c, depth + 1);
      if (!vc.empty()) detail::fadd(out, u_act(u, m - j, vc), b);
      // -(-1)^{m + p(u)p(v)} v_(m+n-j)(u_(j)c)
      FTerms uc = u_act(u, j, c);
      for (const auto& [x, cx] : uc) detail::fadd(out, nprod(v, m + n - j, x, depth + 1), b * cx * second_sign);
    }
    return out;
  }

  AlgebraSpec spec_;
  ResourceGuards guards_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<TensorMonomial, long, TensorMonomial>, FTerms> nprod_cache_;
  mutable std::map<std::tuple<int, std::pair<int, long>, FWord>, detail::WordTerms> lie_cache_;
};

/// Element of a registered algebra: a finite combination of PBW tensor monomials.
class FState {
 public:
  explicit FState(AlgebraPtr alg) : alg_(std::move(alg)) {}
  FState(AlgebraPtr alg, FTerms terms) : alg_(std::move(alg)), terms_(std::move(terms)) {}

  static FState vacuum(AlgebraPtr alg) {
    TensorMonomial v = alg->vacuum();
    return FState(alg, FTerms{{v, Scalar(1)}});
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const FTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const TensorMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  Scalar vacuum_coefficient() const { return coefficient(alg_->vacuum()); }

  std::vector<long> weights2() const {
    std::vector<long> w;
    for (const auto& [m, c] : terms_) w.push_back(alg_->weight2(m));
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
  }

  bool homogeneous() const { return weights2().size() <= 1; }

  FState act(const FMode& x) const { return FState(alg_, alg_->act(x, terms_)); }

  friend FState operator+(const FState& a, const FState& b) {
    a.same(b);
    FTerms t = a.terms_;
    detail::fadd(t, b.terms_);
    return FState(a.alg_, std::move(t));
  }
  friend FState operator-(const FState& a, const FState& b) { return a + b * Scalar(-1); }
  friend FState operator*(const FState& a, const Scalar& c) {
    FTerms t;
    detail::fadd(t, a.terms_, c);
    return FState(a.alg_, std::move(t));
  }
  friend FState operator*(const Scalar& c, const FState& a) { return a * c; }
  friend bool operator==(const FState& a, const FState& b) { return (a - b).is_zero(); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")" + alg_->monomial_str(m);
    }
    return s;
  }

 private:
  void same(const FState& o) const {
    if (alg_ != o.alg_) throw ValidationError("states belong to different algebras");
  }

  AlgebraPtr alg_;
  FTerms terms_;
};

inline FState nth_product(const FState& a, long n, const FState& b) {
  if (a.algebra() != b.algebra()) throw ValidationError("states belong to different algebras");
  const AlgebraPtr& alg = a.algebra();
  FTerms out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) detail::fadd(out, alg->nprod(ma, n, mb), ca * cb);
  return FState(alg, std::move(out));
}

/// Normally ordered product :ab: = a_(-1)b.
inline FState nop(const FState& a, const FState& b) { return nth_product(a, -1, b); }

/// Translation: Da = a_(-2)1.
inline FState deriv(const FState& a) { return nth_product(a, -2, FState::vacuum(a.algebra())); }

inline FState mode_act(const FMode& x, const FState& s) { return s.act(x); }

/// The generating field state X_(-1)1.
inline FState generator_state(const AlgebraPtr& alg, std::string_view factor, std::string_view gen) {
  return FState::vacuum(alg).act(alg->mode(factor, gen, -1));
}

/// e^{q phi} in a lattice factor.
inline FState lattice_state(const AlgebraPtr& alg, std::string_view factor, long q) {
  int f = alg->spec().factor_index(factor);
  if (alg->factor(f).kind != FactorKind::Lattice)
    throw ValidationError("factor '" + std::string(factor) + "' is not a lattice factor");
  TensorMonomial m = alg->vacuum();
  m[f].q = q;
  return FState(alg, FTerms{{m, Scalar(1)}});
}

/// Embeds a state of the bp factor's vacuum module.
inline FState bp_state(const AlgebraPtr& alg, std::string_view factor, const BPState& s) {
  int f = alg->spec().factor_index(factor);
  if (alg->factor(f).kind != FactorKind::BPAbstract)
    throw ValidationError("factor '" + std::string(factor) + "' is not a bp factor");
  FTerms t;
  for (const auto& [mono, c] : s.terms()) {
    TensorMonomial m = alg->vacuum();
    m[f].word = detail::from_monomial(mono);
    detail::fadd(t, m, c);
  }
  return FState(alg, std::move(t));
}

}  // namespace bpw
