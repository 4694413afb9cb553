#pragma once

#include "bpw/classify/curves.hpp"
#include "bpw/wmod/modes.hpp"

namespace bpw {

/// Virasoro central charge c_k of T.
inline Scalar central_charge(const Level& level) {
  const Scalar& k = level.k();
  return -(Scalar(3) * k + Scalar(1)) * (Scalar(2) * k + Scalar(3)) / level.k_plus_3();
}

namespace detail {

inline ModeExpr scale(ModeExpr e, const Scalar& c) {
  if (c.is_zero()) return {};
  for (auto& [w, v] : e) v *= c;
  return e;
}

inline void accumulate(ModeExpr& into, const ModeExpr& e) {
  for (const auto& [w, v] : e) add_term(into, w, v);
}

/// Brackets with a on the left for the generator pairs listed directly;
/// returns false when only the reversed pair is tabulated.
inline bool direct_bracket(const Level& level, const BPMode& a, const BPMode& b, ModeExpr& out) {
  const Scalar& k = level.k();
  long m = a.index, n = b.index;
  using G = BPGen;
  if (a.gen == G::J && b.gen == G::J) {
    if (m + n == 0) add_term(out, {}, (Scalar(2) * k + Scalar(3)) / Scalar(3) * Scalar(m));
    return true;
  }
  if (a.gen == G::J && (b.gen == G::Gplus || b.gen == G::Gminus)) {
    add_term(out, {BPMode{b.gen, m + n}}, Scalar(b.gen == G::Gplus ? 1 : -1));
    return true;
  }
  if (a.gen == G::L && b.gen == G::J) {
    add_term(out, {BPMode{G::J, m + n}}, Scalar(-n));
    return true;
  }
  if (a.gen == G::L && (b.gen == G::Gplus || b.gen == G::Gminus)) {
    add_term(out, {BPMode{b.gen, m + n}}, Scalar(m, 2) - Scalar(n) + Scalar(1, 2));
    return true;
  }
  if (a.gen == G::L && b.gen == G::L) {
    add_term(out, {BPMode{G::L, m + n}}, Scalar(m - n));
    if (m + n == 0) add_term(out, {}, central_charge(level) / Scalar(12) * Scalar(m * m * m - m));
    return true;
  }
  if (a.gen == G::Gplus && b.gen == G::Gminus) {
    long p = m + n - 1;
    add_term(out, {BPMode{G::JJ, p}}, Scalar(3));
    add_term(out, {BPMode{G::J, p}}, Scalar(3, 2) * (k + Scalar(1)) * Scalar(m - n));
    add_term(out, {BPMode{G::L, p}}, -(k + Scalar(3)));
    if (m + n == 1)
      add_term(out, {}, (k + Scalar(1)) * (Scalar(2) * k + Scalar(3)) * Scalar((m - 1) * m) / Scalar(2));
    return true;
  }
  if (a.gen == b.gen && (a.gen == G::Gplus || a.gen == G::Gminus)) return true;  // [G,G] = 0
  return false;
}

}  // namespace detail

/// [a, b] for generator modes; every W^k field is even, so this is a commutator.
inline ModeExpr commutator(const Level& level, const BPMode& a, const BPMode& b) {
  if (a.gen == BPGen::JJ || b.gen == BPGen::JJ)
    throw UnknownGeneratorError("commutator is defined on generator modes only");
  ModeExpr out;
  if (detail::direct_bracket(level, a, b, out)) return out;
  ModeExpr rev;
  detail::direct_bracket(level, b, a, rev);
  return detail::scale(rev, Scalar(-1));
}

}  // namespace bpw
