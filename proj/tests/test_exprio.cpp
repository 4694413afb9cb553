#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "bpw/exprio.hpp"
#include "bpw/ffield.hpp"
#include "bpw/suites/runner.hpp"

using namespace bpw;

namespace {

std::string sample(const std::string& name) {
  std::ifstream in(std::string(BPW_SAMPLES_DIR) + "/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

AlgebraPtr osp_F() { return load_algebra(sample("osp12_F.alg")); }

class AstGen {
 public:
  explicit AstGen(unsigned seed) : rng_(seed) {}

  Expr expr(int depth) {
    int top = depth <= 0 ? 4 : 11;
    switch (pick(top)) {
      case 0: return Expr::vacuum();
      case 1: return Expr::hwv(scalar(), scalar());
      case 2: return Expr::lattice(pick(7) - 3);
      case 3: return Expr::ident(pick(2) ? "t" : "osp.x");
      case 4: return Expr::mode(pick(2) ? "osp" : "F", pick(2) ? "x" : "psi+", Rational(pick(9) - 6, pick(2) + 1),
                                expr(depth - 1));
      case 5: return Expr::nprod(pick(7) - 3, expr(depth - 1), expr(depth - 1));
      case 6: return Expr::nop(expr(depth - 1), expr(depth - 1));
      case 7: return Expr::deriv(expr(depth - 1));
      case 8: return Expr::scale(scalar(), expr(depth - 1));
      case 9: {
        std::vector<Expr> terms;
        for (int i = pick(4); i > 0; --i) terms.push_back(expr(depth - 1));
        return Expr::sum(std::move(terms));
      }
      default: return Expr::let(pick(2) ? "t" : "tau-", expr(depth - 1), expr(depth - 1));
    }
  }

 private:
  std::mt19937 rng_;
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  Scalar scalar() {
    switch (pick(3)) {
      case 0: return Scalar(pick(11) - 5, pick(4) + 1);
      case 1: return Scalar::variable("kp") * Scalar(pick(5) - 2) + Scalar(pick(3));
      default: return Scalar(1) / (Scalar::variable("kp") + Scalar(pick(3) + 1));
    }
  }
};

}  // namespace

TEST(ExprParse, Examples) {
  Expr e = parse_expr("(nprod 2 (mode osp.x -1 (mode F.psi+ -1/2 vac)) tauminus)");
  ASSERT_EQ(e.kind, ExprKind::NProd);
  EXPECT_EQ(e.index, Rational(2));
  EXPECT_EQ(e.args[0].kind, ExprKind::Mode);
  EXPECT_EQ(e.args[0].args[0].index, Rational(-1, 2));
  EXPECT_EQ(e.args[1], Expr::ident("tauminus"));

  Expr g = parse_expr("(mode W.G+ -1 (mode W.G+ -1 (mode W.G+ -1 vac)))");
  EXPECT_EQ(g, Expr::mode("W", "G+", Rational(-1),
                          Expr::mode("W", "G+", Rational(-1), Expr::mode("W", "G+", Rational(-1), Expr::vacuum()))));

  EXPECT_EQ(parse_expr("hwv(1/2, {kp})"), Expr::hwv(Scalar(1, 2), Scalar::variable("kp")));
  EXPECT_EQ(parse_expr("; comment\n latt(-2)"), Expr::lattice(-2));
}

TEST(ExprParse, Diagnostics) {
  try {
    parse_expr("(mode F.phi -1/3 vac)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("index parity"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 13u);
  }
  try {
    parse_expr("(sum vac\n  (nop vac vac)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{")"});
  }
  try {
    parse_expr("(frob vac)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 2u);
    EXPECT_EQ(e.expected().size(), 7u);
  }
  EXPECT_THROW(parse_expr("vac vac"), ParseError);
  EXPECT_THROW(parse_expr("(nprod 1/2 vac vac)"), ParseError);
  EXPECT_THROW(parse_expr("hwv(1,{kp +})"), ParseError);
}

TEST(ExprParse, RoundTripRandomCorpus) {
  AstGen gen(2024u);
  for (int i = 0; i < 400; ++i) {
    Expr e = gen.expr(4);
    std::string text = print_expr(e);
    Expr back = parse_expr(text);
    ASSERT_EQ(back, e) << text;
    EXPECT_EQ(print_expr(back), text);
  }
}

TEST(ExprParse, FuzzOnlyPositionedDiagnostics) {
  std::mt19937 rng(77u);
  const std::string alphabet = "()(){}{},,;\n \t-+/*.0123456789vachwlatmodenprsuxyF.psi+G\x01\xff";
  AstGen gen(5u);
  auto check = [&](const std::string& input) {
    try {
      parse_expr(input);
    } catch (const ParseError& e) {
      EXPECT_GE(e.line(), 1u) << input;
      EXPECT_GE(e.column(), 1u) << input;
    } catch (const std::exception& e) {
      ADD_FAILURE() << "non-diagnostic exception '" << e.what() << "' on input: " << input;
    }
  };
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    for (int n = std::uniform_int_distribution<int>(0, 40)(rng); n > 0; --n)
      s += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
    check(s);
  }
  for (int i = 0; i < 1500; ++i) {
    std::string s = print_expr(gen.expr(3));
    for (int n = std::uniform_int_distribution<int>(1, 3)(rng); n > 0 && !s.empty(); --n) {
      std::size_t at = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0: s.erase(at, 1); break;
        case 1: s.insert(at, 1, alphabet[at % alphabet.size()]); break;
        default: s[at] = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
      }
    }
    check(s);
  }
  check(std::string(1000, '('));
  check("latt(123456789012345678901234567890)");
  check("(nprod 99999999999999999999999 vac vac)");
}

TEST(ExprEval, SampleFiles) {
  AlgebraPtr A = osp_F();
  ExprValue v = eval_expr(A, parse_expr(sample("tau_product.expr")));
  FState vac = FState::vacuum(A);
  EXPECT_EQ(std::get<FState>(v), vac * (Scalar(-2) * Scalar::variable("kp")));
  EXPECT_EQ(print_value(A, v), "(scale {-2*kp} vac)");

  AlgebraPtr D = load_algebra(sample("bp_lattice.alg"), Scalar(1));
  ExprValue x1y = eval_expr(D, parse_expr(sample("duality_x1y.expr")));
  EXPECT_EQ(std::get<FState>(x1y), FState::vacuum(D) * Scalar(-5, 2));

  ExprValue g3 = eval_expr(D, parse_expr(sample("gplus_cubed.expr")));
  ModulePtr vac1 = BPModule::vacuum(Level(Scalar(1)));
  EXPECT_EQ(std::get<FState>(g3), bp_state(D, "W", power_state(vac1, {BPGen::Gplus, -1}, 3)));
}

TEST(ExprEval, SemanticErrors) {
  AlgebraPtr A = osp_F();
  auto eval = [&](const char* s) { return eval_expr(A, parse_expr(s)); };
  EXPECT_THROW(eval("(mode F.psi+ -1 vac)"), ValidationError);
  EXPECT_THROW(eval("(mode osp.x -1/2 vac)"), ValidationError);
  EXPECT_THROW(eval("(mode osp.q -1 vac)"), UnknownGeneratorError);
  EXPECT_THROW(eval("(mode Q.x -1 vac)"), UnknownGeneratorError);
  EXPECT_THROW(eval("nobody"), ValidationError);
  EXPECT_THROW(eval("latt(1)"), ValidationError);
  EXPECT_THROW(eval("hwv(0,0)"), ValidationError);
  try {
    eval("(sum vac\n (mode F.psi+ 2 vac))");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(std::string(e.what()).substr(0, 4), "2:2:");
  }
}

TEST(ExprEval, HighestWeightModule) {
  AlgebraPtr D = load_algebra(sample("bp_lattice.alg"), Scalar(1));
  ExprValue v = eval_expr(D, parse_expr("(mode W.G- 0 (mode W.T -1 hwv(1/2,0)))"));
  const BPState& b = std::get<BPState>(v);
  ModulePtr M = BPModule::highest_weight(Level(Scalar(1)), {Scalar(1, 2), Scalar(0)});
  BPState want = BPState::head(M).act({BPGen::L, -2}).act({BPGen::Gminus, 0});
  EXPECT_EQ(BPState(M, b.terms()), want);
  EXPECT_THROW(eval_expr(D, parse_expr("(nop hwv(0,0) vac)")), ValidationError);
  EXPECT_THROW(eval_expr(D, parse_expr("(mode L.phi -1 hwv(0,0))")), ValidationError);
}

TEST(ExprPrint, StateRenderingReevaluates) {
  AlgebraPtr A = osp_F();
  PhiMapImages im = phi_map_images(Scalar::variable("kp"));
  std::vector<FState> states = {im.tau_plus, im.omega_F, im.witness, nth_product(im.tau_plus, 0, im.tau_minus)};
  for (const FState& s : states) {
    FState moved(A, s.terms());
    std::string text = print_value(A, moved);
    EXPECT_EQ(ExprEvaluator(A).eval_state(parse_expr(text)), moved) << text;
  }
  DualityImages d = duality_images();
  for (const auto& [name, s] : d.osp) {
    std::string text = print_value(d.alg, s);
    EXPECT_EQ(ExprEvaluator(d.alg).eval_state(parse_expr(text)), s) << name << ": " << text;
  }
  ModulePtr M = BPModule::highest_weight(Level(Scalar(1)), {Scalar(1, 3), Scalar(2)});
  BPState b = BPState::head(M).act({BPGen::Gplus, -1}).act({BPGen::Gminus, 0}).act({BPGen::J, -1});
  std::string text = print_value(d.alg, b);
  BPState back = std::get<BPState>(eval_expr(d.alg, parse_expr(text)));
  EXPECT_EQ(BPState(M, back.terms()), b) << text;
  EXPECT_EQ(print_value(A, FState(A)), "(sum)");
}

TEST(AlgebraFile, ShippedSpecMatchesBuiltin) {
  AlgebraSpec s = parse_algebra_spec(sample("osp12.alg"));
  ASSERT_EQ(s.factors.size(), 1u);
  Factor builtin = osp12_factor(Scalar::variable("kp"));
  EXPECT_EQ(s.name, "osp12");
  EXPECT_EQ(s.factors[0].ope, builtin.ope);
  for (std::size_t g = 0; g < builtin.gens.size(); ++g) {
    EXPECT_EQ(s.factors[0].gens[g].name, builtin.gens[g].name);
    EXPECT_EQ(s.factors[0].gens[g].odd, builtin.gens[g].odd);
    EXPECT_EQ(s.factors[0].gens[g].weight2, builtin.gens[g].weight2);
  }
  EXPECT_NO_THROW(load_algebra(sample("osp12_F.alg")));
}

TEST(AlgebraFile, Errors) {
  std::string base = sample("osp12.alg");
  auto edit = [&](const std::string& from, const std::string& to) {
    std::string s = base;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  try {
    parse_algebra_spec(edit("gen: x odd 1", "gen: x 1"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
    EXPECT_EQ(e.line(), 9u);
  }
  try {
    parse_algebra_spec(edit("(x,y) = 2", "(x,y) = 2\n(y,x) = 2"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("skew"), std::string::npos);
  }
  EXPECT_THROW(parse_algebra_spec(edit("gen: y odd 1", "gen: y odd 1\ngen: y even 1")), ParseError);
  EXPECT_THROW(parse_algebra_spec(edit("[e,f] = h", "[e,f] = z")), ParseError);
  EXPECT_THROW(parse_algebra_spec(edit("[e,f] = h", "[e,q] = h")), ParseError);
  EXPECT_THROW(parse_algebra_spec(edit("{x,y} = h", "{x,y} = h h")), ParseError);
  EXPECT_THROW(parse_algebra_spec(edit("[h,x] = x", "[h,x] = 2 x")), ValidationError);
  EXPECT_THROW(parse_algebra_spec(edit("kind: affine", "kind: loop")), ParseError);
  EXPECT_THROW(parse_algebra_spec(edit("level: kp", "level: $level")), ParseError);
  EXPECT_NO_THROW(parse_algebra_spec(edit("level: kp", "level: $level"), Scalar(-5, 4)));
  EXPECT_THROW(parse_algebra_spec(""), ParseError);
  EXPECT_THROW(parse_algebra_spec("[factor a]\n[factor a]\n"), ParseError);
}

TEST(Report, EmitAndRead) {
  Report empty{"none", "1", {}, std::nullopt};
  std::string text = emit_report(empty);
  EXPECT_EQ(text, "{\n  \"checks\": [],\n  \"level\": \"1\",\n  \"suite\": \"none\"\n}\n");
  EXPECT_EQ(read_report(text), empty);

  Report r{"demo", "1/2", {}, std::nullopt};
  r.add({make_check("a", true, "1", "1"), make_check("a", false, "3/2", "2", "off by 1/2")});
  EXPECT_EQ(r.checks[1].id, "a#2");
  EXPECT_EQ(r.checks[1].status, CheckStatus::Fail);
  EXPECT_FALSE(r.passed());
  Report back = read_report(emit_report(r));
  EXPECT_EQ(back, r);
  EXPECT_EQ(back.checks[1].lhs, "3/2");
  r.elapsed_ms = 12;
  EXPECT_NE(emit_report(r).find("elapsed_ms"), std::string::npos);
  EXPECT_THROW(read_report("{"), ParseError);
  EXPECT_THROW(read_report("{\"suite\":\"s\",\"level\":\"1\",\"checks\":[{\"id\":\"a\"}]}"), ValidationError);
}

TEST(Report, PhiMapCoversTheFullTable) {
  Report r = run_suite({"phi-map", Rational(1), {}, false, false});
  EXPECT_TRUE(r.passed());
  for (const char* id : {"G+_(0)G- = ", "T_(3)T = ", "table G-_(3)G-", "table J_(0)J"}) {
    bool found = false;
    for (const auto& c : r.checks) found = found || c.id.find(id) != std::string::npos;
    EXPECT_TRUE(found) << id;
  }
  EXPECT_GE(r.checks.size(), 12u);
  EXPECT_EQ(emit_report(r), emit_report(run_suite({"phi-map", Rational(1), {}, false, false})));
}
