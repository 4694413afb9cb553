#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bpw/classify.hpp"
#include "bpw/exprio.hpp"
#include "bpw/suites/runner.hpp"

namespace {

using namespace bpw;

constexpr int kExitConfig = 2;

struct Options {
  std::string suite;
  std::string level;
  long max_weight = ResourceGuards{}.max_weight;
  std::string report;
  bool symbolic = false;
  bool timing = false;
  std::string point;
  long curve = 0;
  long samples = 5;
  std::string from = "vacuum";
  long steps = 10;
  std::string algebra_path;
  std::string expr_path;
};

std::optional<Rational> parse_level(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    return Rational::parse(s);
  } catch (const Error&) {
    throw DomainError("level '" + s + "' is not an exact rational p/q");
  }
}

Level required_level(const Options& o) {
  auto l = parse_level(o.level);
  if (!l) throw DomainError("--level is required");
  return Level(Scalar(*l));
}

ResourceGuards guards_of(const Options& o) {
  ResourceGuards g;
  if (o.max_weight < 0) throw DomainError("--max-weight must be non-negative");
  g.max_weight = o.max_weight;
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << text;
}

Weight parse_point(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("point '" + s + "' must be x,y");
  return {Scalar(Rational::parse(s.substr(0, comma))), Scalar(Rational::parse(s.substr(comma + 1)))};
}

void print_checks(const Report& r) {
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Pass) {
      std::cout << "pass  " << c.id << "\n";
    } else {
      std::cout << status_name(c.status) << "  " << c.id << "\n    lhs: " << c.lhs << "\n    rhs: " << c.rhs << "\n";
      if (!c.detail.empty()) std::cout << "    " << c.detail << "\n";
    }
  }
  long failed = 0;
  for (const auto& c : r.checks) failed += c.status == CheckStatus::Fail;
  std::cout << r.suite << " (k = " << r.level << "): " << r.checks.size() - failed << "/" << r.checks.size()
            << " checks pass\n";
}

int run_verify(const Options& o, const std::string& suite) {
  SuiteDescriptor d{suite, parse_level(o.level), guards_of(o), o.symbolic, o.timing};
  Report r = run_suite(d);
  if (!o.report.empty()) write_output(o.report, emit_report(r));
  print_checks(r);
  return exit_code(r);
}

std::string csv_row(const Level& L, const std::string& index, const Weight& w) {
  auto ws = witnesses_in_Sk(L, w);
  auto td = top_dim(L, w);
  return L.k().str() + "," + index + "," + w.x.str() + "," + w.y.str() + "," + join_longs(ws) + "," +
         (td.dim ? std::to_string(*td.dim) : "none") + "\n";
}

int run_classify(const Options& o) {
  Level L = required_level(o);
  if (!L.positive_integer_regime()) throw DomainError("classify needs k+2 in Z>=1");
  std::string out = "k,i,x,y,witnesses,top_dim\n";
  if (!o.point.empty()) {
    Weight w = parse_point(o.point);
    out += csv_row(L, "", w);
    if (top_dim(L, w).multi_witness) std::cerr << "note: several curves meet here; top_dim is the smallest witness\n";
  } else if (o.curve > 0) {
    if (o.samples < 0) throw DomainError("--samples must be non-negative");
    CurveIndex i(o.curve);
    for (long s = 0; s < o.samples; ++s) {
      Scalar x(s);
      Weight w{x, curve_solve_y(i, L, x)};
      if (!eval_h(i, L, w).is_zero()) throw Error("curve sample off its curve");
      out += csv_row(L, std::to_string(o.curve), w);
    }
  } else {
    for (long i = 1; i <= L.curve_count(); ++i) out += csv_row(L, std::to_string(i), special_point(L, CurveIndex(i)));
  }
  write_output(o.report, out);
  return 0;
}

int run_orbit(const Options& o) {
  Level L = required_level(o);
  if (o.steps < 0) throw DomainError("--steps must be non-negative");
  std::vector<OrbitStep> rows;
  if (o.from == "vacuum") {
    rows = vacuum_orbit_table(L, o.steps);
  } else if (o.from.rfind("special:", 0) == 0) {
    rows = special_orbit_table(L, CurveIndex(Rational::parse(o.from.substr(8)).to_long()), o.steps);
  } else if (o.from.rfind("point:", 0) == 0) {
    if (!L.positive_integer_regime()) throw DomainError("orbits from a point need k+2 in Z>=1");
    Weight w = parse_point(o.from.substr(6));
    for (long m = 0; m <= o.steps; ++m) {
      auto td = top_dim(L, w);
      rows.push_back({OrbitEntry{m, w, td.dim, td.multi_witness}, w, td.dim, true});
      if (!td.dim) break;
      w = sflow_weight(L, w, CurveIndex(*td.dim));
    }
  } else {
    throw DomainError("--from must be vacuum, special:i or point:x,y");
  }
  write_output(o.report, orbit_csv(L, rows));
  for (const auto& r : rows)
    if (!r.matches) {
      std::cerr << "closed form and recursion disagree at n = " << r.closed.n << "\n";
      return 1;
    }
  return 0;
}

int run_ope(const Options& o) {
  auto level = parse_level(o.level);
  ResourceGuards g = guards_of(o);
  AlgebraPtr alg = load_algebra(read_file(o.algebra_path), level ? std::optional<Scalar>(Scalar(*level)) : std::nullopt, g);
  Expr e = parse_expr(read_file(o.expr_path));
  std::string text = print_value(alg, eval_expr(alg, e)) + "\n";
  write_output(o.report, text);
  return 0;
}

int run_report(const Options& o) {
  Report r = read_report(read_file(o.report));
  print_checks(r);
  return exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for the Bershadsky-Polyakov algebra W^k"};
  app.set_config("--config", "", "Read flags from a TOML/INI file");
  app.require_subcommand(1, 1);
  Options o;

  auto level_opt = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--level", o.level, "Level k as an exact rational p/q");
    if (required) opt->required();
  };
  auto guard_opt = [&](CLI::App* c) { c->add_option("--max-weight", o.max_weight, "Weight guard"); };

  std::string suites;
  for (const auto& n : suite_names()) suites += (suites.empty() ? "" : ", ") + n;

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "One of: " + suites)->required();
  level_opt(verify, false);
  guard_opt(verify);
  verify->add_option("--report", o.report, "Write the JSON report here");
  verify->add_flag("--symbolic", o.symbolic, "Check identities as exact polynomials instead of on sample grids");
  verify->add_flag("--timing", o.timing, "Record elapsed time in the report");

  CLI::App* singvec = app.add_subcommand("singvec", "Alias for verify --suite singvec");
  level_opt(singvec, false);
  guard_opt(singvec);
  singvec->add_option("--report", o.report, "Write the JSON report here");
  singvec->add_flag("--timing", o.timing, "Record elapsed time in the report");

  CLI::App* classify = app.add_subcommand("classify", "Curve membership, curve samples, special points (CSV)");
  level_opt(classify, true);
  auto* point = classify->add_option("--point", o.point, "Weight x,y to classify");
  auto* curve = classify->add_option("--curve", o.curve, "Sample points of the curve h_i = 0");
  point->excludes(curve);
  classify->add_option("--samples", o.samples, "Number of curve samples");
  classify->add_option("--report", o.report, "Write the CSV here");

  CLI::App* orbit = app.add_subcommand("orbit", "Spectral-flow orbit table (CSV)");
  level_opt(orbit, true);
  orbit->add_option("--from", o.from, "vacuum | special:i | point:x,y");
  orbit->add_option("--steps", o.steps, "Number of flow steps");
  orbit->add_option("--report", o.report, "Write the CSV here");

  CLI::App* ope = app.add_subcommand("ope", "Evaluate a DSL expression in an algebra spec file");
  ope->add_option("algebra", o.algebra_path, "Algebra spec file")->required();
  ope->add_option("expr", o.expr_path, "Expression file")->required();
  level_opt(ope, false);
  guard_opt(ope);
  ope->add_option("--report", o.report, "Write the result here");

  CLI::App* report = app.add_subcommand("report", "Read a JSON report and summarise it");
  report->add_option("path", o.report, "Report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (verify->parsed()) return run_verify(o, o.suite);
    if (singvec->parsed()) return run_verify(o, "singvec");
    if (classify->parsed()) return run_classify(o);
    if (orbit->parsed()) return run_orbit(o);
    if (ope->parsed()) return run_ope(o);
    if (report->parsed()) return run_report(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
