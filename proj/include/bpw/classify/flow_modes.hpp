#pragma once

#include "bpw/classify/curves.hpp"
#include "bpw/wmod/modes.hpp"

namespace bpw {

using ShiftedExpr = LinearModeExpr<ShiftedMode>;

/// Spectral flow psi on shifted W^k modes.
inline ShiftedExpr sflow_bp_mode(const Level& level, const ShiftedMode& m) {
  ShiftedExpr e;
  Scalar shift = m.index == 0 ? level.flow_shift() : Scalar(0);
  switch (m.gen) {
    case BPGen::J:
      add_term(e, {m}, Scalar(1));
      add_term(e, {}, -shift);
      break;
    case BPGen::L:
      add_term(e, {m}, Scalar(1));
      add_term(e, {ShiftedMode{BPGen::J, m.index}}, Scalar(-1));
      add_term(e, {}, shift);
      break;
    case BPGen::Gplus:
      add_term(e, {ShiftedMode{BPGen::Gplus, m.index - 1}}, Scalar(1));
      break;
    case BPGen::Gminus:
      add_term(e, {ShiftedMode{BPGen::Gminus, m.index + 1}}, Scalar(1));
      break;
    case BPGen::JJ:
      throw UnknownGeneratorError("spectral flow is defined on generators only");
  }
  return e;
}

/// rho^n image of an osp(1|2) mode: a mode plus a multiple of the central K.
struct OspFlowImage {
  OspMode mode;
  long central = 0;
  friend bool operator==(const OspFlowImage&, const OspFlowImage&) = default;
  std::string str() const {
    std::string s = mode.str();
    if (central) s += (central > 0 ? " + " : " - ") + std::to_string(central > 0 ? central : -central) + "K";
    return s;
  }
};

inline OspFlowImage sflow_osp_mode(const OspMode& m, long n) {
  switch (m.gen) {
    case OspGen::e: return {{OspGen::e, m.index - 2 * n}};
    case OspGen::f: return {{OspGen::f, m.index + 2 * n}};
    case OspGen::x: return {{OspGen::x, m.index - n}};
    case OspGen::y: return {{OspGen::y, m.index + n}};
    case OspGen::h: return {{OspGen::h, m.index}, m.index == 0 ? -2 * n : 0};
  }
  throw UnknownGeneratorError("unknown osp(1|2) generator");
}

/// Applies rho^n to an image that already carries a central part.
inline OspFlowImage sflow_osp_mode(const OspFlowImage& img, long n) {
  OspFlowImage out = sflow_osp_mode(img.mode, n);
  out.central += img.central;
  return out;
}

}  // namespace bpw
