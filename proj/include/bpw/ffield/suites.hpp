#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bpw/check.hpp"
#include "bpw/ffield/delta.hpp"
#include "bpw/ffield/sugawara.hpp"
#include "bpw/wmod/slices.hpp"

namespace bpw {

/// Row-reduced span of FStates of one algebra.
class FEchelon {
 public:
  bool insert(FTerms v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar lead = v.begin()->second;
    TensorMonomial pivot = v.begin()->first;
    FTerms row;
    detail::fadd(row, v, lead.inverse());
    rows_.emplace(std::move(pivot), std::move(row));
    return true;
  }

  FTerms reduce(FTerms v) const {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& [m, c] : v) {
        auto it = rows_.find(m);
        if (it == rows_.end()) continue;
        detail::fadd(v, it->second, -c);
        changed = true;
        break;
      }
    }
    return v;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<TensorMonomial, FTerms> rows_;
};

/// Spanning set of the descendants of `gens` with doubled weight `target2`,
/// built from creation modes of Lie-type factors (zero modes at most `zero_cap` times).
inline std::vector<FState> lie_descendants(const std::vector<FState>& gens, long target2, long zero_cap = 2) {
  std::vector<FState> out;
  if (gens.empty()) return out;
  const AlgebraPtr& alg = gens.front().algebra();
  std::vector<std::pair<FMode, long>> modes;
  for (int f = 0; f < alg->size(); ++f) {
    const Factor& fa = alg->factor(f);
    if (!fa.lie_type()) continue;
    for (int g = 0; g < static_cast<int>(fa.gens.size()); ++g)
      for (long n = 0; fa.gens[g].weight2 - 2 * (-n) - 2 <= target2 || n == 0; --n) {
        long w = fa.gens[g].weight2 - 2 * n - 2;
        if (w < 0) continue;
        if (w > target2) break;
        if (n == 0 && fa.kind != FactorKind::AffineSuper) continue;
        modes.push_back({{f, g, n}, w});
      }
  }
  for (const FState& g : gens)
    for (long w2 : g.weights2()) {
      long remaining = target2 - w2;
      if (remaining < 0) continue;
      std::vector<std::size_t> word;
      std::function<void(std::size_t, long, long)> rec = [&](std::size_t from, long rem, long zeros) {
        if (rem == 0) {
          FState s = g;
          for (auto it = word.rbegin(); it != word.rend(); ++it) s = s.act(modes[*it].first);
          if (!s.is_zero()) out.push_back(s);
        }
        for (std::size_t i = from; i < modes.size(); ++i) {
          long w = modes[i].second;
          if (w > rem || (w == 0 && zeros >= zero_cap)) continue;
          word.push_back(i);
          rec(i, rem - w, zeros + (w == 0 ? 1 : 0));
          word.pop_back();
        }
      };
      rec(0, remaining, 0);
    }
  return out;
}

/// Reduces s modulo the Lie-type descendants of `gens`, weight by weight.
inline FState reduce_modulo(const FState& s, const std::vector<FState>& gens) {
  std::map<long, FTerms> parts;
  for (const auto& [m, c] : s.terms()) parts[s.algebra()->weight2(m)].emplace(m, c);
  FTerms out;
  for (auto& [w2, t] : parts) {
    FEchelon ech;
    for (const FState& d : lie_descendants(gens, w2)) ech.insert(d.terms());
    detail::fadd(out, ech.reduce(std::move(t)));
  }
  return FState(s.algebra(), std::move(out));
}

namespace detail {

/// Compares lhs with rhs; on mismatch retries modulo `reduce`, naming the reduction.
inline CheckResult relation_check(std::string name, const FState& lhs, const FState& rhs,
                                  const std::function<FState(const FState&)>& reduce, const std::string& reduction) {
  FState diff = lhs - rhs;
  if (diff.is_zero()) return make_check(std::move(name), true, lhs.str(), rhs.str(), "exact");
  if (!reduce) return make_check(std::move(name), false, lhs.str(), rhs.str(), "difference " + diff.str());
  FState red = reduce(diff);
  return make_check(std::move(name), red.is_zero(), lhs.str(), rhs.str(),
                    red.is_zero() ? "modulo " + reduction : "residue " + red.str() + " modulo " + reduction);
}

inline BPMode bp_va_mode(const std::string& gen, long n) {
  if (gen == "J") return {BPGen::J, n};
  if (gen == "T") return {BPGen::L, n - 1};
  if (gen == "G+") return {BPGen::Gplus, n};
  if (gen == "G-") return {BPGen::Gminus, n};
  throw UnknownGeneratorError("unknown generator '" + gen + "'");
}

inline std::string bp_gen_of(BPGen g) {
  switch (g) {
    case BPGen::J: return "J";
    case BPGen::L: return "T";
    case BPGen::Gplus: return "G+";
    case BPGen::Gminus: return "G-";
    default: throw UnknownGeneratorError("composite mode has no generator");
  }
}

/// Image of a vacuum-module state under a map given on the generators.
inline FState image_of(const BPState& s, const std::map<std::string, FState>& img, const AlgebraPtr& alg) {
  FState out(alg);
  for (const auto& [mono, c] : s.terms()) {
    FState v = FState::vacuum(alg);
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
      std::string g = bp_gen_of(it->gen);
      long n = it->gen == BPGen::L ? it->index + 1 : it->index;
      v = nth_product(img.at(g), n, v);
    }
    out = out + v * c;
  }
  return out;
}

}  // namespace detail

// ---- osp(1|2) at level -5/4 tensor F ----

struct PhiMapImages {
  AlgebraPtr alg;
  FState tau_plus, tau_minus, alpha, omega_F, omega_sug, h_perp, omega_perp, witness;
  std::map<std::string, FState> W;  // J, T, G+, G-
};

inline AlgebraPtr osp_F_algebra(const Scalar& kp) {
  return Algebra::create({"osp12xF", {osp12_factor(kp, "osp"), clifford_charged_factor("F")}});
}

inline PhiMapImages phi_map_images(const Scalar& kp = Scalar(-5, 4)) {
  PhiMapImages im{osp_F_algebra(kp), FState(nullptr), FState(nullptr), FState(nullptr), FState(nullptr),
                  FState(nullptr), FState(nullptr), FState(nullptr), FState(nullptr), {}};
  const AlgebraPtr& A = im.alg;
  auto g = [&](const char* f, const char* n) { return generator_state(A, f, n); };
  FState x = g("osp", "x"), y = g("osp", "y"), h = g("osp", "h");
  FState pp = g("F", "psi+"), pm = g("F", "psi-");
  im.tau_plus = nop(pp, x);
  im.tau_minus = nop(pm, y);
  im.alpha = nop(pp, pm);
  im.omega_F = nop(im.alpha, im.alpha) * Scalar(1, 2);
  im.omega_sug = sugawara(A, "osp");
  im.witness = sugawara_witness(A, "osp");
  im.h_perp = im.alpha - h;
  im.omega_perp = nop(im.h_perp, im.h_perp) * Scalar(-1, 3);
  im.W.emplace("G+", im.tau_plus * Scalar(2));
  im.W.emplace("G-", im.tau_minus * Scalar(2));
  im.W.emplace("J", im.alpha * Scalar(5, 3) - h * Scalar(2, 3));
  im.W.emplace("T", im.omega_sug + im.omega_F - im.omega_perp);
  return im;
}

/// Every defining relation of the level-1 algebra on the free-field images.
inline std::vector<CheckResult> phi_map_suite() {
  std::vector<CheckResult> out;
  // Symbolic level for the two fermionic building-block products.
  {
    Scalar kp = Scalar::variable("kp");
    PhiMapImages s = phi_map_images(kp);
    FState vac = FState::vacuum(s.alg);
    FState h = generator_state(s.alg, "osp", "h");
    out.push_back(detail::relation_check("tau+_(2)tau- = -2k' (symbolic k')", nth_product(s.tau_plus, 2, s.tau_minus),
                                         vac * (Scalar(-2) * kp), nullptr, ""));
    out.push_back(detail::relation_check("tau+_(1)tau- = -2k' alpha - h (symbolic k')",
                                         nth_product(s.tau_plus, 1, s.tau_minus),
                                         s.alpha * (Scalar(-2) * kp) - h, nullptr, ""));
  }
  PhiMapImages im = phi_map_images();
  const AlgebraPtr& A = im.alg;
  FState vac = FState::vacuum(A);
  std::vector<FState> ideal{im.witness};
  auto reduce = [&](const FState& d) { return reduce_modulo(d, ideal); };
  const std::string red = "descendants of omega_sug - (:xy: - Dh/2)";
  const FState &J = im.W.at("J"), &T = im.W.at("T"), &Gp = im.W.at("G+"), &Gm = im.W.at("G-");

  out.push_back(detail::relation_check("J_(1)J = 5/3", nth_product(J, 1, J), vac * Scalar(5, 3), nullptr, ""));
  out.push_back(detail::relation_check("G+_(2)G- = 10", nth_product(Gp, 2, Gm), vac * Scalar(10), nullptr, ""));
  out.push_back(detail::relation_check("G+_(1)G- = 6J", nth_product(Gp, 1, Gm), J * Scalar(6), nullptr, ""));
  out.push_back(detail::relation_check("G+_(0)G- = 3:JJ: + 3DJ - 4T", nth_product(Gp, 0, Gm),
                                       nop(J, J) * Scalar(3) + deriv(J) * Scalar(3) - T * Scalar(4), reduce, red));
  out.push_back(detail::relation_check("T_(3)T = -5/2", nth_product(T, 3, T), vac * Scalar(-5, 2), reduce, red));
  out.push_back(detail::relation_check("T_(1)T = 2T", nth_product(T, 1, T), T * Scalar(2), reduce, red));
  out.push_back(detail::relation_check("T_(0)T = DT", nth_product(T, 0, T), deriv(T), reduce, red));
  out.push_back(detail::relation_check("T_(1)J = J", nth_product(T, 1, J), J, reduce, red));
  out.push_back(detail::relation_check("T_(1)G+ = 3/2 G+", nth_product(T, 1, Gp), Gp * Scalar(3, 2), reduce, red));
  out.push_back(detail::relation_check("T_(1)G- = 3/2 G-", nth_product(T, 1, Gm), Gm * Scalar(3, 2), reduce, red));

  // Full table: a_(n)b for all generator pairs against the bracket table of the vacuum module.
  ModulePtr bp = BPModule::vacuum(Level(Scalar(1)));
  const char* names[] = {"J", "T", "G+", "G-"};
  for (const char* a : names)
    for (const char* b : names) {
      BPState bstate = BPState::head(bp).act(detail::bp_va_mode(b, -1));
      long top = (A->weight2(im.W.at(a).terms().begin()->first) + A->weight2(im.W.at(b).terms().begin()->first)) / 2;
      for (long n = 0; n <= top; ++n) {
        BPState expected = bstate.act(detail::bp_va_mode(a, n));
        FState rhs = detail::image_of(expected, im.W, A);
        out.push_back(detail::relation_check(std::string("table ") + a + "_(" + std::to_string(n) + ")" + b,
                                             nth_product(im.W.at(a), n, im.W.at(b)), rhs, reduce, red));
      }
    }
  return out;
}

// ---- bp(1) tensor F_{-1} ----

struct DualityImages {
  AlgebraPtr alg;
  std::map<std::string, FState> osp;  // e, f, h, x, y
  FState h_bar;
};

inline DualityImages duality_images() {
  AlgebraPtr A = Algebra::create({"bpxF-1", {bp_factor(Level(Scalar(1)), "W", ResourceGuards{12, 64, 20000}), lattice_factor("L", -1)}});
  auto W = [&](const char* g) { return generator_state(A, "W", g); };
  auto e = [&](long q) { return lattice_state(A, "L", q); };
  FState phi = generator_state(A, "L", "phi");
  DualityImages im{A, {}, FState(A)};
  im.osp.emplace("x", nop(W("G+"), e(1)) * Scalar(1, 2));
  im.osp.emplace("y", nop(W("G-"), e(-1)) * Scalar(-1, 2));
  im.osp.emplace("e", nop(nop(W("G+"), W("G+")), e(2)) * Scalar(1, 8));
  im.osp.emplace("f", nop(nop(W("G-"), W("G-")), e(-2)) * Scalar(-1, 8));
  im.osp.emplace("h", W("J") * Scalar(-3, 2) - phi * Scalar(5, 2));
  im.h_bar = W("J") + phi;
  return im;
}

/// Reduces the bp components of s modulo the submodule generated by G+-_{-1}^3 1.
inline FState reduce_bp_ideal(const FState& s) {
  const AlgebraPtr& A = s.algebra();
  ModulePtr bp = A->factor(0).bp;
  long n = lemma_power(bp->level());
  std::vector<BPState> gens{power_state(bp, {BPGen::Gplus, -1}, n), power_state(bp, {BPGen::Gminus, -1}, n)};
  std::map<std::vector<FactorPart>, Terms> groups;
  for (const auto& [m, c] : s.terms()) {
    std::vector<FactorPart> rest(m.begin() + 1, m.end());
    groups[rest].emplace(detail::to_monomial(m[0].word), c);
  }
  FTerms out;
  for (const auto& [rest, t] : groups) {
    BPState st(bp, t);
    long top = 0;
    for (long w : st.weights()) top = std::max(top, w);
    BPState r = ideal_reduce(st, gens, top);
    for (const auto& [mono, c] : r.terms()) {
      TensorMonomial m{FactorPart{detail::from_monomial(mono), 0}};
      m.insert(m.end(), rest.begin(), rest.end());
      detail::fadd(out, m, c);
    }
  }
  return FState(A, std::move(out));
}

inline std::vector<CheckResult> duality_map_suite() {
  DualityImages im = duality_images();
  const AlgebraPtr& A = im.alg;
  FState vac = FState::vacuum(A);
  Factor table = osp12_factor(Scalar(-5, 4));
  const std::string red = "the submodule generated by G+-_{-1}^3 1";
  std::vector<CheckResult> out;
  auto img = [&](const std::string& g) { return im.osp.at(g); };
  auto value = [&](const OpeValue* v) {
    FState r(A);
    if (!v) return r;
    for (const auto& [g, c] : v->gens) r = r + img(table.gens[g].name) * c;
    return r + vac * v->vac;
  };
  // Named relations first.
  struct Named {
    const char* a;
    long n;
    const char* b;
    const char* label;
  };
  for (const Named& r : {Named{"x", 1, "y", "x(1)y = -5/2"}, Named{"x", 0, "y", "x(0)y = h"},
                         Named{"h", 1, "h", "h(1)h = -5/2"}, Named{"x", 0, "f", "x(0)f = y"},
                         Named{"e", 0, "y", "e(0)y = -x"}, Named{"e", 0, "f", "e(0)f = h"},
                         Named{"h", 0, "e", "h(0)e = 2e"}, Named{"h", 0, "f", "h(0)f = -2f"}}) {
    int a = table.generator(r.a), b = table.generator(r.b);
    out.push_back(detail::relation_check(r.label, nth_product(img(r.a), r.n, img(r.b)), value(table.ope_at(a, b, static_cast<int>(r.n))),
                                         reduce_bp_ideal, red));
  }
  // Positive controls: these fail before reduction and hold after.
  for (auto [a, b] : {std::pair{"x", "e"}, std::pair{"y", "f"}}) {
    FState raw = nth_product(img(a), 0, img(b));
    FState reduced = reduce_bp_ideal(raw);
    out.push_back(make_check(std::string(a) + "(0)" + b + " = 0 needs the (G)^3 relation", !raw.is_zero() && reduced.is_zero(),
                             raw.str(), "0", reduced.is_zero() ? "raw nonzero, zero modulo " + red : "residue " + reduced.str()));
  }
  // h-bar = J + phi commutes with the images and has norm 2/3.
  out.push_back(detail::relation_check("hbar(1)hbar = 2/3", nth_product(im.h_bar, 1, im.h_bar), vac * Scalar(2, 3), nullptr, ""));
  out.push_back(detail::relation_check("hbar(0)hbar = 0", nth_product(im.h_bar, 0, im.h_bar), FState(A), nullptr, ""));
  // Full table a(n)b, n = 0, 1, 2.
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int n = 0; n <= 2; ++n) {
        const std::string& an = table.gens[a].name;
        const std::string& bn = table.gens[b].name;
        out.push_back(detail::relation_check("table " + an + "(" + std::to_string(n) + ")" + bn,
                                             nth_product(img(an), n, img(bn)), value(table.ope_at(a, b, n)), reduce_bp_ideal,
                                             red));
      }
  return out;
}

// ---- coset and twisted sector ----

struct CosetStates {
  FState h_perp;
  FState omega_perp;
  Scalar h_perp_norm;
  Scalar omega_perp_half_c;
  std::vector<CheckResult> checks;
};

inline CosetStates coset_states() {
  PhiMapImages im = phi_map_images();
  FState vac = FState::vacuum(im.alg);
  CosetStates c{im.h_perp, im.omega_perp, nth_product(im.h_perp, 1, im.h_perp).vacuum_coefficient(),
                nth_product(im.omega_perp, 3, im.omega_perp).vacuum_coefficient(), {}};
  c.checks.push_back(detail::relation_check("h_perp(1)h_perp = -3/2", nth_product(im.h_perp, 1, im.h_perp),
                                            vac * Scalar(-3, 2), nullptr, ""));
  c.checks.push_back(detail::relation_check("omega_perp(3)omega_perp = 1/2", nth_product(im.omega_perp, 3, im.omega_perp),
                                            vac * Scalar(1, 2), nullptr, ""));
  c.checks.push_back(detail::relation_check("omega_perp(1)omega_perp = 2 omega_perp",
                                            nth_product(im.omega_perp, 1, im.omega_perp), im.omega_perp * Scalar(2), nullptr, ""));
  c.checks.push_back(detail::relation_check("h_perp(0)G+ = 0", nth_product(im.h_perp, 0, im.W.at("G+")), FState(im.alg),
                                            nullptr, ""));
  c.checks.push_back(detail::relation_check("h_perp(0)G- = 0", nth_product(im.h_perp, 0, im.W.at("G-")), FState(im.alg),
                                            nullptr, ""));
  return c;
}

inline AlgebraPtr charged_fermion_algebra() { return Algebra::create({"F", {clifford_charged_factor("F")}}); }
inline AlgebraPtr neutral_fermion_algebra() { return Algebra::create({"Fhalf", {clifford_neutral_factor("Fhalf")}}); }

struct TwistedTop {
  Rational L0;
  Rational alpha0;
  Rational J0_offset;
  std::vector<CheckResult> checks;
};

/// Top-level eigenvalues on the alpha/2-twisted vacuum of F.
inline TwistedTop twisted_top_eigen() {
  AlgebraPtr A = charged_fermion_algebra();
  FState pp = generator_state(A, "F", "psi+"), pm = generator_state(A, "F", "psi-");
  FState alpha = nop(pp, pm);
  FState omega = nop(alpha, alpha) * Scalar(1, 2);
  LaurentState dw = delta_op(alpha * Scalar(1, 2), omega);
  LaurentState da = delta_op(alpha * Scalar(1, 2), alpha);
  TwistedTop t{dw.at(Rational(-2)).vacuum_coefficient().rational(), da.at(Rational(-1)).vacuum_coefficient().rational(),
               Rational(0), {}};
  t.J0_offset = Rational(5, 3) * t.alpha0;
  t.checks.push_back(make_check("L(0) on twisted vacuum = 1/8", t.L0 == Rational(1, 8), t.L0.str(), "1/8"));
  t.checks.push_back(make_check("alpha(0) on twisted vacuum = 1/2", t.alpha0 == Rational(1, 2), t.alpha0.str(), "1/2"));
  t.checks.push_back(make_check("J(0) offset 5/3 * alpha(0) = 5/6", t.J0_offset == Rational(5, 6), t.J0_offset.str(), "5/6"));
  return t;
}

inline std::vector<CheckResult> delta_twisted_suite() {
  std::vector<CheckResult> out;
  AlgebraPtr A = charged_fermion_algebra();
  FState vac = FState::vacuum(A);
  FState alpha = nop(generator_state(A, "F", "psi+"), generator_state(A, "F", "psi-"));
  FState omega = nop(alpha, alpha) * Scalar(1, 2);
  FState half = alpha * Scalar(1, 2);
  LaurentState want_w(A);
  want_w.add(Rational(0), omega);
  want_w.add(Rational(-1), half);
  want_w.add(Rational(-2), vac * Scalar(1, 8));
  LaurentState dw = delta_op(half, omega);
  out.push_back(make_check("Delta(alpha/2) omega_F = omega + alpha/2 z^-1 + 1/8 z^-2", dw == want_w, dw.str(), want_w.str()));
  LaurentState want_a(A);
  want_a.add(Rational(0), alpha);
  want_a.add(Rational(-1), vac * Scalar(1, 2));
  LaurentState da = delta_op(half, alpha);
  out.push_back(make_check("Delta(alpha/2) alpha = alpha + 1/2 z^-1", da == want_a, da.str(), want_a.str()));
  LaurentState dv = delta_op(half, vac);
  LaurentState want_v(A);
  want_v.add(Rational(0), vac);
  out.push_back(make_check("Delta(alpha/2) 1 = 1", dv == want_v, dv.str(), want_v.str()));

  AlgebraPtr H = neutral_fermion_algebra();
  FState phi = generator_state(H, "Fhalf", "phi");
  FState w = nop(deriv(phi), phi) * Scalar(1, 2);
  LaurentState tw = twisted_correction(w);
  LaurentState want_t(H);
  want_t.add(Rational(0), w);
  want_t.add(Rational(-2), FState::vacuum(H) * Scalar(1, 16));
  out.push_back(make_check("e^{Delta_z} omega_{F1/2} = omega + 1/16 z^-2", tw == want_t, tw.str(), want_t.str()));
  LaurentState tp = twisted_correction(phi);
  LaurentState want_p(H);
  want_p.add(Rational(0), phi);
  out.push_back(make_check("e^{Delta_z} Phi(-1/2)1 = Phi(-1/2)1", tp == want_p, tp.str(), want_p.str()));
  bool anti = true;
  std::string bad;
  for (long m = 0; m <= 8; ++m)
    for (long n = 0; n <= 8; ++n)
      if (!(TwistedCoeff::at(m, n).value == -TwistedCoeff::at(n, m).value)) {
        anti = false;
        bad = "C_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      }
  out.push_back(make_check("C_{m,n} = -C_{n,m} for m,n <= 8", anti, anti ? "antisymmetric" : bad, "antisymmetric"));
  out.push_back(make_check("C_{0,0} = 0", TwistedCoeff::at(0, 0).value == Rational(0), TwistedCoeff::at(0, 0).value.str(), "0"));
  for (const auto& c : twisted_top_eigen().checks) out.push_back(c);
  return out;
}

inline std::vector<CheckResult> sugawara_suite() {
  std::vector<CheckResult> out;
  auto virasoro = [&](const Scalar& kp, const std::string& tag) {
    AlgebraPtr A = Algebra::create({"osp", {osp12_factor(kp, "osp")}});
    FState w = sugawara(A, "osp");
    FState vac = FState::vacuum(A);
    Scalar c = sugawara_central_charge(kp);
    out.push_back(detail::relation_check("omega_(0)omega = D omega " + tag, nth_product(w, 0, w), deriv(w), nullptr, ""));
    out.push_back(detail::relation_check("omega_(1)omega = 2 omega " + tag, nth_product(w, 1, w), w * Scalar(2), nullptr, ""));
    out.push_back(detail::relation_check("omega_(2)omega = 0 " + tag, nth_product(w, 2, w), FState(A), nullptr, ""));
    out.push_back(detail::relation_check("omega_(3)omega = c/2 " + tag + ", c = " + c.str(), nth_product(w, 3, w),
                                         vac * (c * Scalar(1, 2)), nullptr, ""));
    for (const char* g : {"e", "f", "h", "x", "y"}) {
      FState s = generator_state(A, "osp", g);
      out.push_back(detail::relation_check(std::string("omega_(1)") + g + " = " + g + " " + tag, nth_product(w, 1, s), s,
                                           nullptr, ""));
    }
    return A;
  };
  virasoro(Scalar(-5, 4), "at k'=-5/4");
  virasoro(Scalar::variable("kp"), "at symbolic k'");
  Scalar c = sugawara_central_charge(Scalar(-5, 4));
  out.push_back(make_check("central charge at k'=-5/4 is -5", c == Scalar(-5), c.str(), "-5"));
  for (auto [kp, expect] : {std::pair{Scalar(-5, 4), true}, std::pair{Scalar(-7, 6), false}}) {
    AlgebraPtr A = Algebra::create({"osp", {osp12_factor(kp, "osp")}});
    SingularStateReport r = singular_state_check(sugawara_witness(A, "osp"), "osp");
    std::string obs;
    for (const auto& o : r.obstructions) obs += (obs.empty() ? "" : ",") + o;
    out.push_back(make_check("witness singular at k'=" + kp.str() + " is " + (expect ? "true" : "false"), r.singular == expect,
                             r.singular ? "singular" : "obstructed by " + obs, expect ? "singular" : "not singular"));
  }
  bool threw = false;
  try {
    sugawara_central_charge(Scalar(-3, 2));
  } catch (const SingularLevelError&) {
    threw = true;
  }
  out.push_back(make_check("critical level k'=-3/2 rejected", threw, threw ? "SingularLevelError" : "no error",
                           "SingularLevelError"));
  return out;
}

}  // namespace bpw
