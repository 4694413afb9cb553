#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "bpw/ffield.hpp"
#include "bpw/suites/axioms.hpp"
#include "support/fock_oracle.hpp"

using namespace bpw;

namespace {

FState gen(const AlgebraPtr& a, const char* f, const char* g) { return generator_state(a, f, g); }

AlgebraPtr lattice_algebra() { return Algebra::create({"F-1", {lattice_factor("L", -1)}}); }

// Schur polynomials in commuting creation modes phi_(-k), via m S_m = sum_k x_k S_{m-k}
// where exp(sum_k x_k z^k / k) = sum_m S_m z^m and x_k = s phi_(-k).
FState schur(const AlgebraPtr& A, long m, long s, long q) {
  std::vector<FState> S{lattice_state(A, "L", q)};
  for (long j = 1; j <= m; ++j) {
    FState acc(A);
    for (long k = 1; k <= j; ++k) acc = acc + S[j - k].act({0, 0, -k}) * Scalar(s);
    S.push_back(acc * Scalar(1, j));
  }
  return S[m];
}

}  // namespace

TEST(FfieldRegistration, BuiltinsValidate) {
  EXPECT_NO_THROW(Algebra::create({"osp", {osp12_factor(Scalar::variable("kp"))}}));
  EXPECT_NO_THROW(Algebra::create({"osp", {osp12_factor(Scalar(-5, 4))}}));
  EXPECT_NO_THROW(charged_fermion_algebra());
  EXPECT_NO_THROW(neutral_fermion_algebra());
  EXPECT_NO_THROW(Algebra::create({"H", {heisenberg_factor("H", Scalar(2))}}));
  AlgebraPtr L = lattice_algebra();
  EXPECT_TRUE(L->odd(lattice_state(L, "L", 1).terms().begin()->first));
  EXPECT_TRUE(L->odd(lattice_state(L, "L", -1).terms().begin()->first));
  EXPECT_FALSE(L->odd(lattice_state(L, "L", 2).terms().begin()->first));
}

TEST(FfieldRegistration, RejectsBrokenTables) {
  Factor skew = osp12_factor(Scalar(1));
  skew.set(0, 1, 0, OpeValue{{{2, Scalar(2)}}, {}});  // [e,f] = 2h but [f,e] = -h
  try {
    Algebra::create({"bad", {skew}});
    FAIL() << "accepted a non-skew table";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("skew"), std::string::npos);
  }
  Factor jac = osp12_factor(Scalar(1));
  jac.set(2, 3, 0, OpeValue{{{3, Scalar(2)}}, {}});
  jac.set(3, 2, 0, OpeValue{{{3, Scalar(-2)}}, {}});
  EXPECT_THROW(Algebra::create({"bad", {jac}}), ValidationError);
  Factor wt = osp12_factor(Scalar(1));
  wt.gens[3].weight2 = 1;
  EXPECT_THROW(Algebra::create({"bad", {wt}}), ValidationError);
  Factor form = osp12_factor(Scalar(1));
  form.set(2, 2, 1, OpeValue{{}, Scalar(3)});
  EXPECT_THROW(Algebra::create({"bad", {form}}), ValidationError);
  EXPECT_THROW(Algebra::create({"dup", {clifford_charged_factor("F"), clifford_charged_factor("F")}}), ValidationError);
  EXPECT_THROW(charged_fermion_algebra()->mode("F", "Psi0", 0), UnknownGeneratorError);
}

TEST(FfieldModes, DefiningRelations) {
  AlgebraPtr L = lattice_algebra();
  FState phi = gen(L, "L", "phi");
  EXPECT_EQ(phi.act({0, 0, 1}), FState::vacuum(L) * Scalar(-1));
  AlgebraPtr H = neutral_fermion_algebra();
  EXPECT_EQ(gen(H, "Fhalf", "phi").act({0, 0, 0}), FState::vacuum(H));
  EXPECT_TRUE(gen(H, "Fhalf", "phi").act({0, 0, -1}).is_zero());
  // phi_(0) measures the lattice charge with the pairing -1.
  EXPECT_EQ(lattice_state(L, "L", 3).act({0, 0, 0}), lattice_state(L, "L", 3) * Scalar(-3));
}

TEST(FfieldLattice, ProductsMatchSchurPolynomials) {
  AlgebraPtr L = lattice_algebra();
  for (long s : {1, -1}) {
    FState e = lattice_state(L, "L", s);
    for (long n = 1; n <= 3; ++n) EXPECT_TRUE(nth_product(e, n, e).is_zero());
    for (long m = 0; m <= 5; ++m) EXPECT_EQ(nth_product(e, -m, e), schur(L, m, s, 2 * s)) << "s=" << s << " m=" << m;
  }
  FState ep = lattice_state(L, "L", 1), em = lattice_state(L, "L", -1);
  for (long n = -1; n <= 3; ++n) EXPECT_TRUE(nth_product(ep, n, em).is_zero());
  for (long m = 0; m <= 5; ++m) EXPECT_EQ(nth_product(ep, -m - 2, em), schur(L, m, 1, 0)) << "m=" << m;
  EXPECT_EQ(nth_product(ep, -3, em), gen(L, "L", "phi"));
}

TEST(FfieldProducts, FermionicBuildingBlocks) {
  Scalar kp = Scalar::variable("kp");
  PhiMapImages im = phi_map_images(kp);
  FState vac = FState::vacuum(im.alg);
  EXPECT_EQ(nth_product(im.tau_plus, 2, im.tau_minus), vac * (Scalar(-2) * kp));
  EXPECT_EQ(nth_product(im.tau_plus, 1, im.tau_minus), im.alpha * (Scalar(-2) * kp) - gen(im.alg, "osp", "h"));
  EXPECT_EQ(nth_product(im.alpha, 1, im.alpha), vac);
  FState pp = gen(im.alg, "F", "psi+");
  EXPECT_EQ(nth_product(im.omega_F, 1, pp), pp * Scalar(1, 2));
  EXPECT_TRUE(deriv(vac).is_zero());
  for (long n = 0; n <= 3; ++n) EXPECT_TRUE(nth_product(im.tau_plus, n, vac).is_zero());
}

TEST(FfieldSugawara, CentralChargeAndWitness) {
  Scalar kp = Scalar::variable("kp");
  AlgebraPtr A = Algebra::create({"osp", {osp12_factor(kp)}});
  FState w = sugawara(A, "osp");
  // c = k' sdim / (k' + 3/2) with superdimension 1.
  Scalar c = kp / (kp + Scalar(3, 2));
  EXPECT_EQ(nth_product(w, 3, w), FState::vacuum(A) * (c * Scalar(1, 2)));
  EXPECT_TRUE(nth_product(w, 2, w).is_zero());
  EXPECT_EQ(sugawara_central_charge(Scalar(-5, 4)), Scalar(-5));
  EXPECT_THROW(sugawara_central_charge(Scalar(-3, 2)), SingularLevelError);
  EXPECT_THROW(sugawara(Algebra::create({"osp", {osp12_factor(Scalar(-3, 2))}}), "osp"), SingularLevelError);
  for (auto [k, expect] : {std::pair{Scalar(-5, 4), true}, std::pair{Scalar(-7, 6), false}}) {
    AlgebraPtr B = Algebra::create({"osp", {osp12_factor(k)}});
    SingularStateReport r = singular_state_check(sugawara_witness(B, "osp"), "osp");
    EXPECT_EQ(r.singular, expect) << k.str();
    EXPECT_FALSE(r.has_vacuum_component);
  }
  SingularStateReport zero = singular_state_check(FState(A), "osp");
  EXPECT_FALSE(zero.singular);
  EXPECT_TRUE(zero.obstructions.empty());
}

TEST(FfieldDelta, TwistedValues) {
  EXPECT_TRUE(all_pass(delta_twisted_suite()));
  TwistedTop t = twisted_top_eigen();
  EXPECT_EQ(t.L0, Rational(1, 8));
  EXPECT_EQ(t.alpha0, Rational(1, 2));
  EXPECT_EQ(t.J0_offset, Rational(5, 6));
  // C_{0,1} = 1/2 * (-1)/2 * 1 * (-1/2).
  EXPECT_EQ(TwistedCoeff::at(0, 1).value, Rational(1, 8));
  EXPECT_EQ(TwistedCoeff::at(1, 0).value, Rational(-1, 8));
  EXPECT_THROW(TwistedCoeff::at(-1, 0), DomainError);
  EXPECT_EQ(RamondTop::phi0_squared(), Rational(1, 2));
  // h with a non-scalar h_(1)h is rejected.
  AlgebraPtr A = Algebra::create({"osp", {osp12_factor(Scalar(1))}});
  EXPECT_THROW(delta_op(gen(A, "osp", "e"), gen(A, "osp", "f")), ValidationError);
}

TEST(FfieldSuites, TheoremChecks) {
  auto phi = phi_map_suite();
  EXPECT_GE(phi.size(), 12u);
  for (const auto& c : phi) EXPECT_TRUE(c.pass) << c.name << ": " << c.note;
  auto dual = duality_map_suite();
  EXPECT_GE(dual.size(), 10u);
  for (const auto& c : dual) EXPECT_TRUE(c.pass) << c.name << ": " << c.note;
  CosetStates cs = coset_states();
  EXPECT_EQ(cs.h_perp_norm, Scalar(-3, 2));
  EXPECT_EQ(cs.omega_perp_half_c, Scalar(1, 2));
  EXPECT_TRUE(all_pass(cs.checks));
  EXPECT_TRUE(all_pass(sugawara_suite()));
}
TEST(FfieldOracle, NeutralFermionMatchesFockMatrices) {
  auto r = oracle::run_fock_oracle(neutral_fermion_algebra(), oracle::neutral_fock(), 1, 11u, 150);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
  EXPECT_GT(r.nonzero, 20);
}

TEST(FfieldOracle, ChargedFermionMatchesFockMatrices) {
  auto r = oracle::run_fock_oracle(charged_fermion_algebra(), oracle::charged_fock(), 2, 12u, 150);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
  EXPECT_GT(r.nonzero, 20);
}

TEST(FfieldAxioms, AffineTimesCharged) {
  AxiomTally t = check_axioms(affine_fermion_sampler(), 101u, 60);
  EXPECT_EQ(t.failures, 0) << t.first_failure;
}

TEST(FfieldAxioms, LatticeRankOne) {
  AxiomTally t = check_axioms(lattice_sampler(), 202u, 60);
  EXPECT_EQ(t.failures, 0) << t.first_failure;
}

TEST(FfieldAxioms, HeisenbergTimesNeutral) {
  AxiomTally t = check_axioms(heisenberg_fermion_sampler(), 303u, 60);
  EXPECT_EQ(t.failures, 0) << t.first_failure;
}

TEST(FfieldAxioms, SuiteReportsInstances) {
  auto checks = engine_axiom_suite(7u, 102);
  ASSERT_EQ(checks.size(), 3u);
  EXPECT_TRUE(all_pass(checks));
}
