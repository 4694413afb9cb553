#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "bpw/error.hpp"
#include "bpw/exact/scalar.hpp"

namespace bpw {

/// W^k generators. Declaration order is the PBW block order used for
/// monomials; JJ is the composite (J^2)_p that only appears in ModeExpr.
enum class BPGen { L, Gminus, J, Gplus, JJ };

inline std::string gen_name(BPGen g) {
  switch (g) {
    case BPGen::L: return "L";
    case BPGen::Gminus: return "G-";
    case BPGen::J: return "J";
    case BPGen::Gplus: return "G+";
    case BPGen::JJ: return "JJ";
  }
  return "?";
}

/// Unshifted mode X_n (J_n, L_n, G+_n, G-_n).
struct BPMode {
  BPGen gen;
  long index;

  friend auto operator<=>(const BPMode&, const BPMode&) = default;

  /// Degree with respect to the shifted L(0): the amount by which the mode
  /// lowers the shifted weight.
  long shifted_degree() const { return gen == BPGen::Gminus ? index - 1 : index; }
  /// J_0 charge carried by the mode.
  long charge() const { return gen == BPGen::Gplus ? 1 : (gen == BPGen::Gminus ? -1 : 0); }

  std::string str() const { return gen_name(gen) + "_" + std::to_string(index); }
};

/// Linear combination of mode words. A word {X1, ..., Xr} denotes the
/// operator X1 X2 ... Xr (Xr acts first); the empty word is the identity.
template <class Mode>
using LinearModeExpr = std::map<std::vector<Mode>, Scalar>;

using ModeExpr = LinearModeExpr<BPMode>;

template <class Mode>
void add_term(LinearModeExpr<Mode>& e, const std::vector<Mode>& word, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

inline ModeExpr single(const BPMode& m, const Scalar& c = Scalar(1)) {
  ModeExpr e;
  add_term(e, {m}, c);
  return e;
}

template <class Mode>
std::string expr_str(const LinearModeExpr<Mode>& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [word, c] : e) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (word.empty()) out += "*id";
    for (const auto& m : word) out += "*" + m.str();
  }
  return out;
}

/// Mode in the shifted presentation: J(n)=J_n, G+(n)=G+_n, G-(n)=G-_{n+1},
/// L(n) = L_n - (n+1)/2 J_n.
struct ShiftedMode {
  BPGen gen;
  long index;
  friend auto operator<=>(const ShiftedMode&, const ShiftedMode&) = default;
  std::string str() const { return gen_name(gen) + "(" + std::to_string(index) + ")"; }
};

inline ModeExpr to_unshifted(const ShiftedMode& m) {
  switch (m.gen) {
    case BPGen::J: return single({BPGen::J, m.index});
    case BPGen::Gplus: return single({BPGen::Gplus, m.index});
    case BPGen::Gminus: return single({BPGen::Gminus, m.index + 1});
    case BPGen::L: {
      ModeExpr e = single({BPGen::L, m.index});
      add_term(e, {BPMode{BPGen::J, m.index}}, Scalar(-(m.index + 1), 2));
      return e;
    }
    case BPGen::JJ: break;
  }
  throw UnknownGeneratorError("no shifted presentation for composite mode");
}

/// osp(1|2) current modes e(n), f(n), h(n), x(n), y(n).
enum class OspGen { e, f, h, x, y };

inline std::string osp_name(OspGen g) {
  static const char* names[] = {"e", "f", "h", "x", "y"};
  return names[static_cast<int>(g)];
}

struct OspMode {
  OspGen gen;
  long index;
  friend auto operator<=>(const OspMode&, const OspMode&) = default;
  std::string str() const { return osp_name(gen) + "(" + std::to_string(index) + ")"; }
};

}  // namespace bpw
