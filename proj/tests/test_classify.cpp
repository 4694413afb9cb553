#include <gtest/gtest.h>

#include "bpw/classify.hpp"

using namespace bpw;

namespace {

Level lvl(long k) { return Level(Scalar(k)); }
Weight wt(Scalar x, Scalar y) { return {std::move(x), std::move(y)}; }

// p/q in a/b + Z, on plain integers.
bool in_coset(long p, long q, long a, long b) {
  long num = p * b - a * q, den = q * b;
  return num % den == 0;
}

}  // namespace

TEST(Curves, GAndHValues) {
  EXPECT_EQ(eval_g(lvl(1), wt(0, 0)), Scalar(0));
  EXPECT_EQ(eval_g(lvl(1), wt(1, 0)), Scalar(2));
  Weight s = symbolic_weight();
  Scalar x = s.x, y = s.y, k = Scalar::variable("k");
  EXPECT_EQ(eval_g(Level::symbolic(), s), Scalar(-3) * x * x + (Scalar(2) * k + Scalar(3)) * x + (k + Scalar(3)) * y);
  EXPECT_EQ(eval_h(CurveIndex(1), lvl(1), s), Scalar(-3) * x * x + Scalar(5) * x + Scalar(4) * y);
  EXPECT_EQ(eval_h(CurveIndex(2), lvl(1), s), Scalar(-3) * x * x + Scalar(2) * x + Scalar(1) + Scalar(4) * y);
  EXPECT_EQ(eval_h(CurveIndex(3), lvl(1), wt(Scalar(-2, 3), Scalar(1, 6))), Scalar(0));
  EXPECT_THROW(CurveIndex(0), DomainError);
}

TEST(Curves, ExpandedEqualsAverageSymbolicK) {
  for (long i = 1; i <= 8; ++i)
    EXPECT_EQ(eval_h(CurveIndex(i), Level::symbolic(), symbolic_weight()),
              h_average(CurveIndex(i), Level::symbolic(), symbolic_weight()))
        << "i=" << i;
}

TEST(Curves, Witnesses) {
  EXPECT_EQ(witnesses_in_Sk(lvl(1), wt(0, 0)), (std::vector<long>{1, 3}));
  EXPECT_EQ(witnesses_in_Sk(lvl(1), wt(Scalar(-5, 3), Scalar(5, 3))), (std::vector<long>{3}));
  // h_1, h_2, h_3 at (0,1) are 4, 5, 4; (1,1) lies on h_3 = -3x^2 - x + 4y.
  EXPECT_TRUE(witnesses_in_Sk(lvl(1), wt(0, 1)).empty());
  EXPECT_EQ(witnesses_in_Sk(lvl(1), wt(1, 1)), (std::vector<long>{3}));
  EXPECT_THROW(witnesses_in_Sk(Level::symbolic(), wt(0, 0)), DomainError);
  auto td = top_dim(lvl(1), wt(0, 0));
  EXPECT_EQ(td.dim, 1);
  EXPECT_TRUE(td.multi_witness);
  EXPECT_EQ(top_dim(lvl(1), wt(Scalar(-5, 3), Scalar(5, 3))).dim, 3);
  EXPECT_FALSE(top_dim(lvl(1), wt(0, 1)).dim.has_value());
}

TEST(Curves, SolveY) {
  EXPECT_EQ(curve_solve_y(CurveIndex(1), lvl(1), Scalar(0)), Scalar(0));
  EXPECT_EQ(curve_solve_y(CurveIndex(2), lvl(1), Scalar(-1, 3)), Scalar(0));
  Scalar x = Scalar::variable("x"), k = Scalar::variable("k");
  EXPECT_EQ(curve_solve_y(CurveIndex(1), Level::symbolic(), x),
            (Scalar(-3) * x - Scalar(2) * k * x + Scalar(3) * x * x) / (Scalar(3) + k));
  EXPECT_THROW(curve_solve_y(CurveIndex(1), lvl(-3), Scalar(0)), SingularLevelError);
  for (long i = 1; i <= 5; ++i)
    for (long xi = -3; xi <= 3; ++xi) {
      Scalar xv(xi, 2);
      EXPECT_TRUE(eval_h(CurveIndex(i), lvl(2), wt(xv, curve_solve_y(CurveIndex(i), lvl(2), xv))).is_zero());
    }
}

TEST(Flow, WeightMap) {
  EXPECT_EQ(sflow_weight(lvl(1), wt(0, 0), CurveIndex(1)), wt(Scalar(-5, 3), Scalar(5, 3)));
  EXPECT_EQ(sflow_weight(lvl(1), wt(Scalar(-5, 3), Scalar(5, 3)), CurveIndex(3)), wt(Scalar(-4, 3), 3));
  Scalar i = Scalar::variable("i"), k = Scalar::variable("k");
  Weight s = symbolic_weight();
  Weight f = sflow_weight(Level::symbolic(), s, i);
  EXPECT_EQ(f.x, s.x + i - Scalar(1) - (Scalar(2) * k + Scalar(3)) / Scalar(3));
  EXPECT_EQ(f.y, s.y - s.x - i + Scalar(1) + (Scalar(2) * k + Scalar(3)) / Scalar(3));
  EXPECT_EQ(sflow_weight_inverse(Level::symbolic(), f, i), s);
}

TEST(Flow, LemmaIJ) {
  for (long k = 1; k <= 4; ++k)
    for (long i = 1; i <= k + 2; ++i) EXPECT_TRUE(check_lemma_ij(lvl(k), CurveIndex(i), symbolic_weight()));
  EXPECT_TRUE(check_lemma_ij(lvl(1), CurveIndex(1), wt(Scalar(7, 2), -2)));
  EXPECT_THROW(check_lemma_ij(lvl(1), CurveIndex(4), symbolic_weight()), DomainError);
}

TEST(Orbit, VacuumSpotValues) {
  EXPECT_EQ(vacuum_orbit(lvl(1), 0).weight, wt(0, 0));
  EXPECT_EQ(vacuum_orbit(lvl(1), 3).weight, wt(-3, 6));
  EXPECT_EQ(vacuum_orbit(lvl(1), -1).weight, wt(Scalar(5, 3), 0));
  for (long k = 1; k <= 4; ++k)
    EXPECT_EQ(vacuum_orbit(lvl(k), -1).weight, wt(Scalar(2 * k + 3, 3), 0));
  EXPECT_THROW(vacuum_orbit(lvl(-3), 1), SingularLevelError);
}

TEST(Orbit, VacuumClosedFormMatchesRecursion) {
  for (long k = 1; k <= 4; ++k) {
    auto rows = vacuum_orbit_table(lvl(k), 50);
    ASSERT_EQ(rows.size(), 101u);
    for (const auto& r : rows) {
      EXPECT_TRUE(r.matches) << "k=" << k << " n=" << r.closed.n;
      EXPECT_EQ(r.witness_top_dim, r.closed.top_dim) << "k=" << k << " n=" << r.closed.n;
      EXPECT_FALSE(witnesses_in_Sk(lvl(k), r.closed.weight).empty());
    }
  }
}

TEST(Orbit, VacuumRecursionAtNonIntegralLevel) {
  for (const Scalar& k : {Scalar(1, 2), Scalar(-7, 3)})
    for (const auto& r : vacuum_orbit_table(Level(k), 10)) EXPECT_TRUE(r.matches);
}

TEST(Orbit, SpecialPoints) {
  EXPECT_EQ(special_point(lvl(1), CurveIndex(1)), wt(0, 0));
  EXPECT_EQ(special_point(lvl(1), CurveIndex(2)), wt(Scalar(-1, 3), 0));
  EXPECT_EQ(special_point(lvl(1), CurveIndex(3)), wt(Scalar(-2, 3), Scalar(1, 6)));
  for (long k = 1; k <= 3; ++k)
    for (long i = 1; i <= k + 2; ++i)
      for (long j = 1; j <= k + 4; ++j)
        EXPECT_EQ(eval_h(CurveIndex(j), lvl(k), special_point(lvl(k), CurveIndex(i))), Scalar((i - j) * (j - 2 - k)));
}

TEST(Orbit, SpecialOrbitClosedFormsAndFactorizations) {
  EXPECT_EQ(orbit_from_special(lvl(1), CurveIndex(2), 0).weight, wt(Scalar(-1, 3), 0));
  EXPECT_EQ(orbit_from_special(lvl(1), CurveIndex(2), 1).weight, wt(-1, 1));
  for (long k = 1; k <= 3; ++k)
    for (long i = 1; i <= k + 2; ++i) {
      for (long m = 0; m <= 41; ++m)
        EXPECT_TRUE(special_factorization_defect(lvl(k), CurveIndex(i), m).is_zero())
            << "k=" << k << " i=" << i << " m=" << m;
      for (const auto& r : special_orbit_table(lvl(k), CurveIndex(i), 20)) {
        EXPECT_TRUE(r.matches) << "k=" << k << " i=" << i << " m=" << r.closed.n;
        EXPECT_EQ(r.witness_top_dim, r.closed.top_dim);
      }
    }
}

TEST(Relaxed, WeightsOnCurves) {
  EXPECT_EQ(relaxed_weight(lvl(1), {Scalar(1, 2), RelaxedSector::UntwistedTop}), wt(0, Scalar(-1, 4)));
  EXPECT_EQ(relaxed_weight(lvl(1), {Scalar(1, 2), RelaxedSector::TwistedTop}), wt(Scalar(5, 6), Scalar(-25, 48)));
  Scalar lam = Scalar::variable("lam");
  for (auto sector : {RelaxedSector::UntwistedTop, RelaxedSector::TwistedTop})
    EXPECT_TRUE(eval_h(relaxed_curve(sector), lvl(1), relaxed_weight(lvl(1), {lam, sector})).is_zero());
  EXPECT_EQ(RelaxedParams::delta(lvl(1), lam), Scalar(1) - Scalar(2) * lam);
  EXPECT_EQ(RelaxedParams::delta_prime(lvl(1), lam), Scalar(3, 2) - Scalar(2) * lam);
}

TEST(Relaxed, IrreducibilityTable) {
  const std::pair<long, long> lambdas[] = {{1, 8}, {5, 8}, {-3, 8}, {0, 1}, {3, 1}, {-1, 4}, {3, 4},
                                           {1, 2}, {-1, 2}, {1, 4}, {1, 3}, {7, 5}};
  for (auto [p, q] : lambdas) {
    IrreducibilityPredicates expect{!in_coset(p, q, 1, 8) && !in_coset(p, q, 5, 8),
                                    !in_coset(p, q, 0, 1) && !in_coset(p, q, -1, 4),
                                    !in_coset(p, q, -1, 2) && !in_coset(p, q, -3, 4)};
    EXPECT_EQ(irreducibility_predicates(Rational(p, q)), expect) << p << "/" << q;
  }
  EXPECT_FALSE(irreducibility_predicates(Rational(1, 8)).F_irred);
  EXPECT_FALSE(irreducibility_predicates(Rational(0)).E0_irred);
  EXPECT_EQ(irreducibility_predicates(Rational(1, 3)), (IrreducibilityPredicates{true, true, true}));
}

TEST(FlowModes, BP) {
  Level k1 = lvl(1);
  ShiftedExpr j0 = sflow_bp_mode(k1, {BPGen::J, 0});
  ShiftedExpr want;
  add_term(want, {ShiftedMode{BPGen::J, 0}}, Scalar(1));
  add_term(want, {}, Scalar(-5, 3));
  EXPECT_EQ(j0, want);
  ShiftedExpr g = sflow_bp_mode(k1, {BPGen::Gplus, 2});
  EXPECT_EQ(g, (ShiftedExpr{{{ShiftedMode{BPGen::Gplus, 1}}, Scalar(1)}}));
  ShiftedExpr l0 = sflow_bp_mode(k1, {BPGen::L, 0});
  want.clear();
  add_term(want, {ShiftedMode{BPGen::L, 0}}, Scalar(1));
  add_term(want, {ShiftedMode{BPGen::J, 0}}, Scalar(-1));
  add_term(want, {}, Scalar(5, 3));
  EXPECT_EQ(l0, want);
  EXPECT_THROW(sflow_bp_mode(k1, {BPGen::JJ, 0}), UnknownGeneratorError);
}

TEST(FlowModes, OspCompositionLaw) {
  EXPECT_EQ(sflow_osp_mode(OspMode{OspGen::e, 0}, 1), (OspFlowImage{{OspGen::e, -2}, 0}));
  EXPECT_EQ(sflow_osp_mode(OspMode{OspGen::h, 0}, 1), (OspFlowImage{{OspGen::h, 0}, -2}));
  EXPECT_EQ(sflow_osp_mode(OspMode{OspGen::f, 2}, -1), (OspFlowImage{{OspGen::f, 0}, 0}));
  for (auto g : {OspGen::e, OspGen::f, OspGen::h, OspGen::x, OspGen::y})
    for (long idx = -3; idx <= 3; ++idx)
      for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
          EXPECT_EQ(sflow_osp_mode(sflow_osp_mode(OspMode{g, idx}, b), a), sflow_osp_mode(OspMode{g, idx}, a + b));
}

TEST(Csv, OrbitTable) {
  std::string csv = orbit_csv(lvl(1), vacuum_orbit_table(lvl(1), 1));
  EXPECT_EQ(csv,
            "k,n,x,y,witnesses,top_dim\n"
            "1,-1,5/3,0,1,1\n"
            "1,0,0,0,1;3,1\n"
            "1,1,-5/3,5/3,3,3\n");
}
