#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("bpw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CliRun cli(const std::string& args) {
  fs::path out = scratch() / "stdout.txt";
  fs::path err = scratch() / "stderr.txt";
  std::string cmd = std::string("\"") + BPW_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string sample(const std::string& name) { return std::string("\"") + BPW_SAMPLES_DIR + "/" + name + "\""; }

}  // namespace

TEST(Cli, SingvecExitCodes) {
  CliRun ok = cli("verify --suite singvec --level 1");
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  EXPECT_NE(ok.out.find("checks pass"), std::string::npos);

  CliRun neg = cli("singvec --level 1/2");
  EXPECT_EQ(neg.code, 1) << neg.out << neg.err;
  EXPECT_NE(neg.out.find("fail"), std::string::npos);
}

TEST(Cli, ConfigurationErrorsExitTwo) {
  EXPECT_EQ(cli("verify --suite nosuch").code, 2);
  EXPECT_EQ(cli("verify --suite singvec --level 0.5").code, 2);
  EXPECT_EQ(cli("verify --suite duality-map --level 2").code, 2);
  EXPECT_EQ(cli("verify --suite phi-map --max-weight 2").code, 2);
  EXPECT_EQ(cli("classify").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("frobnicate").code, 2);
  CliRun missing = cli("ope /nonexistent.alg /nonexistent.expr");
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot read"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministicAndReadable) {
  fs::path a = scratch() / "a.json";
  fs::path b = scratch() / "b.json";
  ASSERT_EQ(cli("verify --suite delta-twisted --report \"" + a.string() + "\"").code, 0);
  ASSERT_EQ(cli("verify --suite delta-twisted --report \"" + b.string() + "\"").code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a).find("elapsed_ms"), std::string::npos);

  CliRun summary = cli("report \"" + a.string() + "\"");
  EXPECT_EQ(summary.code, 0);
  EXPECT_NE(summary.out.find("delta-twisted"), std::string::npos);

  fs::path t = scratch() / "t.json";
  ASSERT_EQ(cli("verify --suite delta-twisted --timing --report \"" + t.string() + "\"").code, 0);
  EXPECT_NE(slurp(t).find("elapsed_ms"), std::string::npos);

  fs::path bad = scratch() / "bad.json";
  std::ofstream(bad) << "{\"suite\":\"x\",\"level\":\"1\",\"checks\":[{\"id\":\"c\",\"status\":\"fail\",\"lhs\":\"1\","
                        "\"rhs\":\"2\",\"detail\":\"\"}]}";
  EXPECT_EQ(cli("report \"" + bad.string() + "\"").code, 1);
}

TEST(Cli, ConfigFile) {
  fs::path cfg = scratch() / "run.toml";
  std::ofstream(cfg) << "[verify]\nsuite = \"singvec\"\nlevel = \"0\"\n";
  CliRun r = cli("--config \"" + cfg.string() + "\" verify");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("k = 0"), std::string::npos);
}

TEST(Cli, ClassifyCsv) {
  CliRun p = cli("classify --level 1 --point 0,0");
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out, "k,i,x,y,witnesses,top_dim\n1,,0,0,1;3,1\n");
  EXPECT_NE(p.err.find("note:"), std::string::npos);

  CliRun c = cli("classify --level 2 --curve 2 --samples 3");
  ASSERT_EQ(c.code, 0) << c.err;
  std::istringstream rows(c.out);
  std::string line;
  int n = 0;
  while (std::getline(rows, line)) ++n;
  EXPECT_EQ(n, 4);

  CliRun s = cli("classify --level 1");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 4);
  EXPECT_EQ(cli("classify --level 1/2").code, 2);
}

TEST(Cli, OrbitCsv) {
  CliRun v = cli("orbit --level 1 --steps 4");
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(std::count(v.out.begin(), v.out.end(), '\n'), 10);
  EXPECT_NE(v.out.find("\n1,0,0,0,1;3,1\n"), std::string::npos);
  EXPECT_EQ(cli("orbit --level 2 --from special:3 --steps 6").code, 0);
  EXPECT_EQ(cli("orbit --level 1 --from point:0,0 --steps 3").code, 0);
  EXPECT_EQ(cli("orbit --level 1 --from elsewhere").code, 2);
}

TEST(Cli, OpeSamples) {
  CliRun tau = cli("ope " + sample("osp12_F.alg") + " " + sample("tau_product.expr"));
  EXPECT_EQ(tau.code, 0) << tau.err;
  EXPECT_EQ(tau.out, "(scale {-2*kp} vac)\n");

  CliRun dual = cli("ope " + sample("bp_lattice.alg") + " " + sample("duality_x1y.expr") + " --level 1");
  EXPECT_EQ(dual.code, 0) << dual.err;
  EXPECT_EQ(dual.out, "(scale -5/2 vac)\n");

  CliRun unbound = cli("ope " + sample("bp_lattice.alg") + " " + sample("duality_x1y.expr"));
  EXPECT_EQ(unbound.code, 2);
  EXPECT_NE(unbound.err.find("level"), std::string::npos);

  fs::path bad = scratch() / "bad.expr";
  std::ofstream(bad) << "(mode osp.x\n  -1/3 vac)";
  CliRun parity = cli("ope " + sample("osp12_F.alg") + " \"" + bad.string() + "\"");
  EXPECT_EQ(parity.code, 2);
  EXPECT_NE(parity.err.find("2:3"), std::string::npos) << parity.err;
  EXPECT_NE(parity.err.find("index parity"), std::string::npos);
}
