#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bpw/error.hpp"
#include "bpw/classify/curves.hpp"
#include "bpw/exact.hpp"
#include "bpw/wmod/module.hpp"

namespace bpw {

enum class FactorKind { Heisenberg, CliffordNeutral, CliffordCharged, Lattice, AffineSuper, BPAbstract };

inline std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::Heisenberg: return "heisenberg";
    case FactorKind::CliffordNeutral: return "clifford-neutral";
    case FactorKind::CliffordCharged: return "clifford-charged";
    case FactorKind::Lattice: return "lattice-rank1";
    case FactorKind::AffineSuper: return "affine-super";
    case FactorKind::BPAbstract: return "bp-abstract";
  }
  return "?";
}

struct GeneratorInfo {
  std::string name;
  bool odd = false;
  long weight2 = 2;  // twice the conformal weight
};

/// a_(j)b for generators a, b: a combination of generators plus a vacuum multiple.
struct OpeValue {
  std::map<int, Scalar> gens;
  Scalar vac;
  bool is_zero() const { return gens.empty() && vac.is_zero(); }
  friend bool operator==(const OpeValue&, const OpeValue&) = default;
};

/// One tensor factor. For Lie-type kinds the OPE table is complete; the
/// lattice factor has generator 0 = phi and vertex operators e^{q phi}; the
/// bp factor delegates to a wmod vacuum module with generators J, T, G+, G-.
struct Factor {
  std::string name;
  FactorKind kind = FactorKind::Heisenberg;
  Scalar level;  // k' (affine), pairing N (heisenberg, lattice), k (bp)
  std::vector<GeneratorInfo> gens;
  std::map<std::tuple<int, int, int>, OpeValue> ope;  // (a, b, j) -> a_(j)b
  ModulePtr bp;

  bool lie_type() const { return kind != FactorKind::Lattice && kind != FactorKind::BPAbstract; }

  int generator(std::string_view gname) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].name == gname) return static_cast<int>(i);
    throw UnknownGeneratorError("factor '" + name + "' has no generator '" + std::string(gname) + "'");
  }

  /// Lattice pairing N as an integer.
  long lattice_N() const {
    const Rational& n = level.rational();
    if (!n.is_integer()) throw ValidationError("lattice pairing must be an integer");
    return n.to_long();
  }

  const OpeValue* ope_at(int a, int b, int j) const {
    auto it = ope.find({a, b, j});
    return it == ope.end() ? nullptr : &it->second;
  }

  void set(int a, int b, int j, OpeValue v) {
    if (v.is_zero())
      ope.erase({a, b, j});
    else
      ope[{a, b, j}] = std::move(v);
  }

  long max_j() const {
    long m = -1;
    for (const auto& [key, v] : ope) m = std::max<long>(m, std::get<2>(key));
    return m;
  }
};

namespace detail {

inline OpeValue ope_scaled(const OpeValue& v, const Scalar& c) {
  OpeValue out;
  for (const auto& [g, s] : v.gens)
    if (!(s * c).is_zero()) out.gens[g] = s * c;
  out.vac = v.vac * c;
  return out;
}

inline void ope_add(OpeValue& into, const OpeValue& v, const Scalar& c = Scalar(1)) {
  for (const auto& [g, s] : v.gens) {
    Scalar t = into.gens.count(g) ? into.gens[g] + s * c : s * c;
    if (t.is_zero())
      into.gens.erase(g);
    else
      into.gens[g] = t;
  }
  into.vac += v.vac * c;
}

inline std::string ope_str(const Factor& f, const OpeValue& v) {
  std::string s;
  for (const auto& [g, c] : v.gens) s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")") + f.gens[g].name;
  if (!v.vac.is_zero()) s += (s.empty() ? "" : " + ") + ("(" + v.vac.str() + ")vac");
  return s.empty() ? "0" : s;
}

}  // namespace detail

/// Checks parity, weight bookkeeping, super skew-symmetry, the Jacobi identity
/// of the zero-mode bracket and invariance of the pairing. Throws ValidationError
/// naming the offending entry.
inline void validate_factor(const Factor& f) {
  if (f.kind == FactorKind::BPAbstract) {
    if (!f.bp) throw ValidationError("bp factor '" + f.name + "' has no module");
    return;
  }
  if (f.kind == FactorKind::Lattice) {
    if (f.lattice_N() == 0) throw ValidationError("lattice factor '" + f.name + "' is degenerate");
    return;
  }
  int n = static_cast<int>(f.gens.size());
  auto label = [&](int a, int b, int j) {
    return f.gens[a].name + "_(" + std::to_string(j) + ")" + f.gens[b].name;
  };
  for (const auto& [key, v] : f.ope) {
    auto [a, b, j] = key;
    if (a < 0 || b < 0 || a >= n || b >= n || j < 0) throw ValidationError("OPE entry out of range in " + f.name);
    bool par = f.gens[a].odd != f.gens[b].odd;
    long w2 = f.gens[a].weight2 + f.gens[b].weight2 - 2 * j - 2;
    for (const auto& [g, c] : v.gens) {
      if (f.gens[g].odd != par)
        throw ValidationError("parity mismatch in " + label(a, b, j) + " -> " + f.gens[g].name);
      if (f.gens[g].weight2 != w2)
        throw ValidationError("weight mismatch in " + label(a, b, j) + " -> " + f.gens[g].name);
    }
    if (j >= 1 && !v.gens.empty()) throw ValidationError("generator-valued higher product " + label(a, b, j) + " is unsupported");
    if (!v.vac.is_zero() && (par || w2 != 0))
      throw ValidationError("vacuum term of wrong parity or weight in " + label(a, b, j));
  }
  // b_(j)a = -(-1)^{p(a)p(b)+j} a_(j)b; higher terms vanish since every
  // higher product is a vacuum multiple.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int j = 0; j <= f.max_j(); ++j) {
        const OpeValue* ab = f.ope_at(a, b, j);
        const OpeValue* ba = f.ope_at(b, a, j);
        int sign = ((f.gens[a].odd && f.gens[b].odd) ? 1 : 0) + j;
        Scalar s = sign % 2 ? Scalar(1) : Scalar(-1);
        OpeValue want = ab ? detail::ope_scaled(*ab, s) : OpeValue{};
        OpeValue have = ba ? *ba : OpeValue{};
        if (!(want == have))
          throw ValidationError("super skew-symmetry fails for " + label(b, a, j) + ": have " +
                                detail::ope_str(f, have) + ", expected " + detail::ope_str(f, want));
      }
  // Jacobi on the zero-mode bracket, and ([a,b],c) = (a,[b,c]) for the j=1 form.
  auto bracket = [&](int a, const OpeValue& v) {
    OpeValue out;
    for (const auto& [g, c] : v.gens)
      if (const OpeValue* e = f.ope_at(a, g, 0)) detail::ope_add(out, *e, c);
    out.vac = Scalar(0);
    return out;
  };
  auto form = [&](const OpeValue& v, int c) {
    Scalar s;
    for (const auto& [g, x] : v.gens)
      if (const OpeValue* e = f.ope_at(g, c, 1)) s += x * e->vac;
    return s;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        OpeValue bc = f.ope_at(b, c, 0) ? *f.ope_at(b, c, 0) : OpeValue{};
        OpeValue ac = f.ope_at(a, c, 0) ? *f.ope_at(a, c, 0) : OpeValue{};
        OpeValue ab = f.ope_at(a, b, 0) ? *f.ope_at(a, b, 0) : OpeValue{};
        bc.vac = ac.vac = ab.vac = Scalar(0);
        OpeValue lhs = bracket(a, bc);
        OpeValue rhs;
        for (const auto& [g, x] : ab.gens)
          if (const OpeValue* e = f.ope_at(g, c, 0)) detail::ope_add(rhs, *e, x);
        rhs.vac = Scalar(0);
        Scalar sign = (f.gens[a].odd && f.gens[b].odd) ? Scalar(-1) : Scalar(1);
        detail::ope_add(rhs, bracket(b, ac), sign);
        if (!(lhs == rhs))
          throw ValidationError("Jacobi identity fails for (" + f.gens[a].name + ", " + f.gens[b].name + ", " +
                                f.gens[c].name + ")");
        Scalar right;
        for (const auto& [g, x] : bc.gens)
          if (const OpeValue* e = f.ope_at(a, g, 1)) right += x * e->vac;
        if (!(form(ab, c) == right))
          throw ValidationError("pairing is not invariant on (" + f.gens[a].name + ", " + f.gens[b].name + ", " +
                                f.gens[c].name + ")");
      }
}

/// Registered tensor product of factors.
struct AlgebraSpec {
  std::string name;
  std::vector<Factor> factors;

  int factor_index(std::string_view fname) const {
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (factors[i].name == fname) return static_cast<int>(i);
    throw UnknownGeneratorError("no factor named '" + std::string(fname) + "'");
  }
};

// ---- built-in factors ----

inline Factor heisenberg_factor(std::string name, Scalar N, std::string gen = "phi") {
  Factor f{std::move(name), FactorKind::Heisenberg, N, {{std::move(gen), false, 2}}, {}, nullptr};
  f.set(0, 0, 1, OpeValue{{}, N});
  return f;
}

inline Factor clifford_neutral_factor(std::string name = "Fhalf") {
  Factor f{std::move(name), FactorKind::CliffordNeutral, Scalar(0), {{"phi", true, 1}}, {}, nullptr};
  f.set(0, 0, 0, OpeValue{{}, Scalar(1)});
  return f;
}

inline Factor clifford_charged_factor(std::string name = "F") {
  Factor f{std::move(name), FactorKind::CliffordCharged, Scalar(0), {{"psi+", true, 1}, {"psi-", true, 1}}, {}, nullptr};
  f.set(0, 1, 0, OpeValue{{}, Scalar(1)});
  f.set(1, 0, 0, OpeValue{{}, Scalar(1)});
  return f;
}

inline Factor lattice_factor(std::string name = "L", long N = -1) {
  return Factor{std::move(name), FactorKind::Lattice, Scalar(N), {{"phi", false, 2}}, {}, nullptr};
}

/// Affine osp(1|2) at level k': a_(0)b = [a,b], a_(1)b = k'(a,b).
inline Factor osp12_factor(Scalar kp, std::string name = "osp") {
  Factor f{std::move(name), FactorKind::AffineSuper, kp,
           {{"e", false, 2}, {"f", false, 2}, {"h", false, 2}, {"x", true, 2}, {"y", true, 2}}, {}, nullptr};
  enum { e, ff, h, x, y };
  auto br = [&](int a, int b, int g, long c) {
    f.set(a, b, 0, OpeValue{{{g, Scalar(c)}}, {}});
    bool both_odd = f.gens[a].odd && f.gens[b].odd;
    if (a != b) f.set(b, a, 0, OpeValue{{{g, Scalar(both_odd ? c : -c)}}, {}});
  };
  br(e, ff, h, 1);
  br(h, e, e, 2);
  br(h, ff, ff, -2);
  br(h, x, x, 1);
  br(ff, x, y, -1);
  br(h, y, y, -1);
  br(e, y, x, -1);
  br(x, x, e, 2);
  br(x, y, h, 1);
  br(y, y, ff, -2);
  auto pair = [&](int a, int b, long c) { f.set(a, b, 1, OpeValue{{}, kp * Scalar(c)}); };
  pair(e, ff, 1);
  pair(ff, e, 1);
  pair(h, h, 2);
  pair(x, y, 2);
  pair(y, x, -2);
  return f;
}

inline Factor bp_factor(Level level, std::string name = "W", ResourceGuards guards = {}) {
  Factor f{std::move(name), FactorKind::BPAbstract, level.k(),
           {{"J", false, 2}, {"T", false, 4}, {"G+", false, 2}, {"G-", false, 4}}, {}, nullptr};
  f.bp = BPModule::vacuum(std::move(level), guards);
  return f;
}

}  // namespace bpw
