#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bpw/check.hpp"
#include "bpw/classify.hpp"

namespace bpw {

namespace detail {

/// d+1 distinct sample values per variable.
inline std::vector<Scalar> sample_points(unsigned degree) {
  std::vector<Scalar> pts;
  for (unsigned r = 0; r <= degree; ++r) pts.emplace_back(3 * static_cast<long>(r) - 1, 2);
  return pts;
}

/// Checks f == 0 on the product grid of degree+1 points per variable; a polynomial
/// of those partial degrees vanishing on the grid is identically zero.
inline CheckResult grid_identity(std::string name, const std::vector<unsigned>& degrees,
                                 const std::function<Scalar(const std::vector<Scalar>&)>& f) {
  std::vector<std::vector<Scalar>> axes;
  for (unsigned d : degrees) axes.push_back(sample_points(d));
  std::vector<std::size_t> idx(degrees.size(), 0);
  long points = 0;
  for (;;) {
    std::vector<Scalar> at;
    for (std::size_t v = 0; v < idx.size(); ++v) at.push_back(axes[v][idx[v]]);
    Scalar val = f(at);
    ++points;
    if (!val.is_zero()) {
      std::string where;
      for (const auto& s : at) where += (where.empty() ? "" : ",") + s.str();
      return make_check(std::move(name), false, val.str(), "0", "nonzero at (" + where + ")");
    }
    std::size_t v = 0;
    while (v < idx.size() && ++idx[v] == axes[v].size()) idx[v++] = 0;
    if (v == idx.size()) break;
  }
  return make_check(std::move(name), true, "0", "0", std::to_string(points) + " sample points");
}

inline CheckResult symbolic_identity(std::string name, const Scalar& lhs, const Scalar& rhs) {
  return make_check(std::move(name), lhs == rhs, lhs.str(), rhs.str(), "polynomial identity");
}

}  // namespace detail

/// h_i expanded vs averaged, the i <-> k+3-i duality, special-point and orbit factorizations.
inline std::vector<CheckResult> classify_identity_suite(const std::vector<long>& levels = {1, 2, 3},
                                                        bool symbolic = false, long max_n = 20) {
  std::vector<CheckResult> out;
  Weight sym = symbolic_weight();
  Scalar j = Scalar::variable("j");
  for (long kv : levels) {
    Level L{Scalar(kv)};
    long top = L.curve_count();
    std::string ks = "k=" + std::to_string(kv);
    for (long iv = 1; iv <= top; ++iv) {
      CurveIndex i(iv);
      std::string tag = ks + " i=" + std::to_string(iv);
      if (symbolic) {
        out.push_back(detail::symbolic_identity("h-average " + tag, eval_h(i, L, sym), h_average(i, L, sym)));
      } else {
        out.push_back(detail::grid_identity("h-average " + tag, {2, 1}, [&](const std::vector<Scalar>& p) {
          Weight w{p[0], p[1]};
          return eval_h(i, L, w) - h_average(i, L, w);
        }));
      }
      CurveIndex dual(kv + 3 - iv);
      if (symbolic) {
        out.push_back(detail::symbolic_identity("lemma-ij " + tag, eval_h(i, L, sym),
                                                eval_h(dual, L, sflow_weight(L, sym, i))));
      } else {
        out.push_back(detail::grid_identity("lemma-ij " + tag, {2, 1}, [&](const std::vector<Scalar>& p) {
          return check_lemma_ij(L, i, {p[0], p[1]}) ? Scalar(0) : Scalar(1);
        }));
      }
      Weight sp = special_point(L, i);
      auto special = [&](const Scalar& jj) {
        return eval_h(jj, L, sp) - (Scalar(iv) - jj) * (Scalar(-2) + jj - L.k());
      };
      if (symbolic)
        out.push_back(detail::symbolic_identity("special-factorization " + tag, special(j), Scalar(0)));
      else
        out.push_back(detail::grid_identity("special-factorization " + tag, {2},
                                            [&](const std::vector<Scalar>& p) { return special(p[0]); }));
      unsigned var = var_index("j");
      CheckResult orbit = make_check("orbit-factorization " + tag, true, "0", "0",
                                     "steps 0.." + std::to_string(2 * max_n + 1));
      for (long m = 0; m <= 2 * max_n + 1 && orbit.pass; ++m) {
        Scalar defect = special_factorization_defect(L, i, m);
        if (symbolic) {
          if (!defect.is_zero()) orbit = make_check(orbit.name, false, defect.str(), "0", "step " + std::to_string(m));
          continue;
        }
        for (const Scalar& at : detail::sample_points(2)) {
          Scalar v = defect.substitute({{var, at}});
          if (!v.is_zero()) {
            orbit = make_check(orbit.name, false, v.str(), "0", "step " + std::to_string(m) + " j=" + at.str());
            break;
          }
        }
      }
      out.push_back(orbit);
    }
  }
  return out;
}

/// Closed forms against the sflow recursion, alternation of top dimensions, Psi^{-1} of the vacuum.
inline std::vector<CheckResult> orbit_suite(const std::vector<long>& levels = {1, 2, 3, 4}, long reach = 50,
                                            long special_steps = 41) {
  std::vector<CheckResult> out;
  for (long kv : levels) {
    Level L{Scalar(kv)};
    std::string ks = "k=" + std::to_string(kv);
    auto rows = vacuum_orbit_table(L, reach);
    std::string bad_match, bad_curve, bad_sk;
    for (const auto& r : rows) {
      std::string n = std::to_string(r.closed.n);
      if (!r.matches && bad_match.empty()) bad_match = "n=" + n + " closed " + r.closed.weight.str() + " recursive " + r.recursive.str();
      if (r.closed.top_dim && !eval_h(CurveIndex(*r.closed.top_dim), L, r.closed.weight).is_zero() && bad_curve.empty())
        bad_curve = "n=" + n;
      if (witnesses_in_Sk(L, r.closed.weight).empty() && bad_sk.empty()) bad_sk = "n=" + n;
    }
    std::string span = "|n|<=" + std::to_string(reach);
    out.push_back(make_check("vacuum-orbit recursion " + ks, bad_match.empty(), "closed form", "recursion",
                             bad_match.empty() ? span : bad_match));
    out.push_back(make_check("vacuum-orbit alternation " + ks, bad_curve.empty(), "h_{top}(x_n,y_n)", "0",
                             bad_curve.empty() ? span : bad_curve));
    out.push_back(make_check("vacuum-orbit in S_k " + ks, bad_sk.empty(), "witnesses", "nonempty",
                             bad_sk.empty() ? span : bad_sk));
    Weight inv = vacuum_orbit_weight(L, -1);
    Weight want{L.flow_shift(), Scalar(0)};
    out.push_back(make_check("psi-inverse vacuum " + ks, inv == want, inv.str(), want.str()));
    for (long iv = 1; iv <= L.curve_count(); ++iv) {
      auto srows = special_orbit_table(L, CurveIndex(iv), special_steps);
      std::string bad;
      for (const auto& r : srows)
        if (!r.matches) {
          bad = "m=" + std::to_string(r.closed.n);
          break;
        }
      out.push_back(make_check("special-orbit recursion " + ks + " i=" + std::to_string(iv), bad.empty(), "closed form",
                               "recursion", bad.empty() ? "steps 0.." + std::to_string(special_steps) : bad));
    }
  }
  return out;
}

namespace detail {

/// p/q in a/b + Z.
inline bool in_shifted_integers(long p, long q, long a, long b) { return (p * b - a * q) % (q * b) == 0; }

}  // namespace detail

/// Relaxed weights on h_2 = 0 and h_1 = 0 in lambda, plus the irreducibility predicates.
inline std::vector<CheckResult> relaxed_weight_suite(long level = 1, bool symbolic = true) {
  std::vector<CheckResult> out;
  Level L{Scalar(level)};
  for (RelaxedSector sector : {RelaxedSector::UntwistedTop, RelaxedSector::TwistedTop}) {
    CurveIndex c = relaxed_curve(sector);
    std::string name = std::string(sector == RelaxedSector::UntwistedTop ? "untwisted" : "twisted") + "-top on h_" +
                       std::to_string(c.value());
    auto h = [&](const Scalar& lam) { return eval_h(c, L, relaxed_weight(L, {lam, sector})); };
    if (symbolic)
      out.push_back(detail::symbolic_identity(name, h(Scalar::variable(VariableRegistry::lam)), Scalar(0)));
    else
      out.push_back(detail::grid_identity(name, {2}, [&](const std::vector<Scalar>& p) { return h(p[0]); }));
  }
  const std::pair<long, long> lambdas[] = {{1, 8}, {5, 8}, {-3, 8}, {0, 1}, {3, 1}, {-1, 4},
                                           {3, 4}, {1, 2}, {-1, 2}, {1, 4}, {1, 3}, {7, 5}};
  for (auto [p, q] : lambdas) {
    using detail::in_shifted_integers;
    IrreducibilityPredicates want{!in_shifted_integers(p, q, 1, 8) && !in_shifted_integers(p, q, 5, 8),
                                  !in_shifted_integers(p, q, 0, 1) && !in_shifted_integers(p, q, -1, 4),
                                  !in_shifted_integers(p, q, -1, 2) && !in_shifted_integers(p, q, -3, 4)};
    IrreducibilityPredicates got = irreducibility_predicates(Rational(p, q));
    auto fmt = [](const IrreducibilityPredicates& v) {
      auto b = [](bool x) { return std::string(x ? "1" : "0"); };
      return "F=" + b(v.F_irred) + " E0=" + b(v.E0_irred) + " E1=" + b(v.E1_irred);
    };
    out.push_back(make_check("predicates lambda=" + Rational(p, q).str(), got == want, fmt(got), fmt(want)));
  }
  return out;
}

}  // namespace bpw
