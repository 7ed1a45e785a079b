#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + SPECLAB_BINARY + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kFeasible = "bounds --n 3 --kappa 1 --D 1 --i0 0.1 --eps 1e-16 --eps0 1e-3 --lambda 10";

}  // namespace

TEST(Cli, BoundsFeasible) {
  const auto r = run(kFeasible);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"feasible\": true"), std::string::npos);
}

TEST(Cli, BoundsZeroEpsilonMultiplierOne) {
  const auto r = run("bounds --n 3 --kappa 1 --D 1 --i0 0.1 --eps 0 --eps0 1e-3 --lambda 10 --vol-y 0.99");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"multiplier\": 1.0"), std::string::npos);
}

TEST(Cli, BoundsInfeasibleStillReports) {
  const auto r = run("bounds --n 3 --kappa 1 --D 1 --i0 0.1 --eps 0.5 --eps0 1e-3 --lambda 10");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("\"feasible\": false"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("bounds --n 3 --kappa 1 --D 1 --i0 0.1 --eps 1e-16 --lambda 10").code, 64);
  EXPECT_EQ(run("verify appendix-z").code, 64);
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("bounds --n 1 --kappa 1 --D 1 --i0 0.1 --eps 0 --eps0 1 --lambda 1").code, 64);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, BadToleranceOverride) {
  EXPECT_EQ(run(kFeasible, "SPECLAB_QUAD_TOL=abc").code, 64);
  EXPECT_EQ(run(kFeasible, "SPECLAB_QUAD_TOL=1e-10").code, 0);
}

TEST(Cli, XiTable) {
  const auto r = run("xi --p 3 --x 0 --x 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("x,value,tail_bound", 0), 0u);
  EXPECT_NE(r.out.find("\n0,1,1,0,"), std::string::npos);
}

TEST(Cli, VerifySuites) {
  EXPECT_EQ(run("verify appendix-c --n-min 2 --n-max 10").code, 0);
  EXPECT_EQ(run("verify appendix-b").code, 0);
  EXPECT_EQ(run("verify appendix-a --samples 2000 --seed 42").code, 0);
  EXPECT_EQ(run("verify cheeger").code, 0);
  const auto csv = run("verify appendix-c --n-min 2 --n-max 3 --format csv");
  EXPECT_EQ(csv.out.rfind("n,u_sup", 0), 0u);
}

TEST(Cli, ExperimentDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "speclab_cli_test";
  std::filesystem::remove_all(dir);
  const auto a = run("experiment mushroom --deltas 0.1 0.01 --seed 5 --out-dir " + (dir / "a").string());
  const auto b = run("experiment mushroom --deltas 0.1 0.01 --seed 5 --out-dir " + (dir / "b").string());
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(dir / "a" / "mushroom.csv"), slurp(dir / "b" / "mushroom.csv"));
  EXPECT_FALSE(slurp(dir / "a" / "mushroom.json").empty());
  std::filesystem::remove_all(dir);
}

TEST(Cli, SpectrumCsv) {
  const auto r = run("spectrum --icosphere 2 --count 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("index,eigenvalue,residual\n0,", 0), 0u);
  EXPECT_EQ(run("spectrum --icosphere 2 --torus 4 4").code, 64);
}
