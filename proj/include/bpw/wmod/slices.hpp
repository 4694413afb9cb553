#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bpw/wmod/module.hpp"

namespace bpw {

struct GradedSlice {
  long weight = 0;
  std::vector<Monomial> basis;
  std::size_t dimension() const { return basis.size(); }
};

namespace detail {

/// Nondecreasing words over `modes` (sorted) with total weight `target`.
/// Weight-zero modes may repeat at most `zero_cap` times in total.
inline void enumerate_words(const std::vector<BPMode>& modes, long target, long zero_cap,
                            const std::function<void(const Monomial&)>& emit) {
  Monomial word;
  std::function<void(std::size_t, long, long)> rec = [&](std::size_t from, long remaining, long zeros) {
    if (remaining == 0) emit(word);
    for (std::size_t i = from; i < modes.size(); ++i) {
      long w = -modes[i].shifted_degree();
      if (w > remaining) continue;
      if (w == 0 && zeros >= zero_cap) continue;
      word.push_back(modes[i]);
      rec(i, remaining - w, zeros + (w == 0 ? 1 : 0));
      word.pop_back();
    }
  };
  rec(0, target, 0);
}

inline std::vector<BPMode> creation_modes(const BPModule& module, long max_weight) {
  std::vector<BPMode> out;
  for (BPGen g : {BPGen::L, BPGen::Gminus, BPGen::J, BPGen::Gplus})
    for (long n = -max_weight - 1; n <= 1; ++n) {
      BPMode m{g, n};
      long w = -m.shifted_degree();
      if (module.is_creation(m) && w >= 0 && w <= max_weight) out.push_back(m);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Modes used to generate the submodule of a singular vector: everything of
/// non-negative weight that does not annihilate it, with G+_0 as the only zero mode.
inline std::vector<BPMode> descendant_modes(long max_weight) {
  std::vector<BPMode> out;
  for (long n = 1; n <= max_weight; ++n) {
    out.push_back({BPGen::J, -n});
    out.push_back({BPGen::L, -n});
    out.push_back({BPGen::Gplus, -n});
  }
  for (long n = 0; n + 1 <= max_weight; ++n) out.push_back({BPGen::Gminus, -n});
  out.push_back({BPGen::Gplus, 0});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Creation monomials of shifted weight N on the head of the module.
inline GradedSlice verma_slice(const BPModule& module, long N) {
  module.guards().check_weight(N, "verma_slice");
  GradedSlice s{N, {}};
  detail::enumerate_words(detail::creation_modes(module, N), N, module.is_vacuum() ? 0 : module.gplus0_bound(),
                          [&](const Monomial& m) {
                            s.basis.push_back(m);
                            module.guards().check_dimension(s.basis.size(), "verma_slice");
                          });
  return s;
}

struct Obstruction {
  BPMode mode;
  BPState image;
};

struct SingularReport {
  bool is_singular = false;
  bool eigenvector = false;
  std::vector<Obstruction> obstructions;
  std::optional<Scalar> j0;       // J_0 eigenvalue
  std::optional<Scalar> l0_shifted;  // L(0) eigenvalue
};

namespace detail {

/// Scalar c with a = c b, if one exists.
inline std::optional<Scalar> proportional(const BPState& a, const BPState& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [m, v] = *b.terms().begin();
  Scalar c = a.coefficient(m) / v;
  if (a == b * c) return c;
  return std::nullopt;
}

}  // namespace detail

/// Raising modes J_n, L_n, G+_n, G-_n (1 <= n <= weight+1) must annihilate the
/// state, which must also be a J_0 and L_0 eigenvector.
inline SingularReport singular_check(const BPState& s) {
  if (!s.homogeneous()) throw DomainError("singular_check needs a homogeneous state");
  SingularReport r;
  long top = s.max_weight() + 1;
  for (BPGen g : {BPGen::J, BPGen::L, BPGen::Gplus, BPGen::Gminus})
    for (long n = 1; n <= top; ++n) {
      BPState img = s.act({g, n});
      if (!img.is_zero()) r.obstructions.push_back({{g, n}, img});
    }
  std::optional<Scalar> j = Scalar(0), l = Scalar(0);
  if (!s.is_zero()) {
    j = detail::proportional(s.act({BPGen::J, 0}), s);
    l = detail::proportional(s.act({BPGen::L, 0}), s);
  }
  r.eigenvector = j.has_value() && l.has_value();
  if (r.eigenvector) {
    r.j0 = *j;
    r.l0_shifted = *l - *j / Scalar(2);
  }
  r.is_singular = r.obstructions.empty() && r.eigenvector;
  return r;
}

/// Echelon basis over PBW coordinates; pivots are leading monomials.
class Echelon {
 public:
  bool insert(Terms v) {
    reduce_in_place(v);
    if (v.empty()) return false;
    Scalar lead = v.begin()->second;
    Monomial pivot = v.begin()->first;
    Terms row;
    add_into(row, v, lead.inverse());
    rows_.emplace(std::move(pivot), std::move(row));
    return true;
  }
  Terms reduce(Terms v) const {
    reduce_in_place(v);
    return v;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce_in_place(Terms& v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Monomial key = it->first;
      Scalar c = -it->second;
      add_into(v, row->second, c);
      it = v.upper_bound(key);
    }
  }
  std::map<Monomial, Terms> rows_;
};

/// Descendants word * g of total weight w (and charge q when given).
inline std::vector<BPState> descendants_at(const std::vector<BPState>& generators, long w,
                                           std::optional<long> q = std::nullopt, long zero_mode_cap = 4) {
  std::vector<BPState> out;
  for (const auto& g : generators) {
    if (!g.homogeneous()) throw DomainError("ideal generators must be homogeneous");
    if (g.is_zero() || g.max_weight() > w) continue;
    long wg = g.max_weight();
    const ResourceGuards& guards = g.module()->guards();
    detail::enumerate_words(detail::descendant_modes(w - wg), w - wg, zero_mode_cap, [&](const Monomial& word) {
      if (q && monomial_charge(word) + g.charge() != *q) return;
      BPState d = g.apply_word(word);
      if (!d.is_zero()) out.push_back(std::move(d));
      guards.check_dimension(out.size(), "ideal_span");
    });
  }
  return out;
}

/// Spanning descendants of the generators, grouped by weight up to N.
inline std::map<long, std::vector<BPState>> ideal_span(const std::vector<BPState>& generators, long N) {
  std::map<long, std::vector<BPState>> out;
  if (generators.empty()) return out;
  generators.front().module()->guards().check_weight(N, "ideal_span");
  long lowest = N + 1;
  for (const auto& g : generators)
    if (!g.is_zero()) lowest = std::min(lowest, g.max_weight());
  for (long w = lowest; w <= N; ++w) {
    auto d = descendants_at(generators, w);
    if (!d.empty()) out[w] = std::move(d);
  }
  return out;
}

/// Canonical representative of s modulo the span of descendants of the generators.
inline BPState ideal_reduce(const BPState& s, const std::vector<BPState>& generators, long N) {
  if (s.is_zero()) return s;
  if (!s.homogeneous()) {
    // Reduce each homogeneous component separately.
    std::map<std::pair<long, long>, Terms> parts;
    for (const auto& [m, c] : s.terms()) parts[{monomial_weight(m), monomial_charge(m)}].emplace(m, c);
    BPState out(s.module());
    for (auto& [key, t] : parts) out = out + ideal_reduce(BPState(s.module(), t), generators, N);
    return out;
  }
  long w = s.max_weight();
  if (w > N) throw ResourceGuardError("state weight " + std::to_string(w) + " exceeds reduction bound");
  s.module()->guards().check_weight(w, "ideal_reduce");
  Echelon ech;
  for (const auto& v : descendants_at(generators, w, s.charge())) ech.insert(v.terms());
  return BPState(s.module(), ech.reduce(s.terms()));
}

/// G+_{-1}^n 1 and G-_{-1}^n 1 with n = k+2 (ceil(k+2) off the integral regime).
inline long lemma_power(const Level& level) {
  Rational k2 = level.k().rational() + Rational(2);
  if (k2.is_integer()) return k2.to_long();
  return (Rational(k2.floor()) + Rational(1)).to_long();
}

inline std::vector<BPState> vacuum_singular_vectors(const ModulePtr& vacuum) {
  long n = lemma_power(vacuum->level());
  return {power_state(vacuum, {BPGen::Gplus, -1}, n), power_state(vacuum, {BPGen::Gminus, -1}, n)};
}

}  // namespace bpw
