// Runs the mwcut binary on the sample inputs.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MWCUT_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(MWCUT_DATA) + "/" + name; }

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

TEST(Cli, SolveP3) {
  auto r = run("solve-nmc " + data("p3.graph") + " --k 1");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(has(r, "verdict: yes"));
  EXPECT_TRUE(has(r, "witness: 2"));
  EXPECT_TRUE(has(r, "lp: 1\n"));
  EXPECT_TRUE(has(r, "pp: 0\n"));
}

TEST(Cli, SolveTriangleAboveCutJson) {
  auto r = run("solve-nmc " + data("tri.graph") + " --k 2 --mode above-cut --json --verify");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(has(r, "\"verdict\": \"yes\""));
  EXPECT_TRUE(has(r, "\"exact\": \"3/2\""));
  EXPECT_TRUE(has(r, "\"decimal\": 1.5"));
  EXPECT_TRUE(has(r, "\"verify\": \"agree\""));
}

TEST(Cli, TraceShowsRule4) {
  std::string path = std::string(MWCUT_TMP) + "/tri.trace";
  auto r = run("solve-nmc " + data("tri.graph") + " --k 2 --mode above-cut --trace " + path);
  EXPECT_EQ(r.status, 0);
  std::ifstream in(path);
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line, "0 rule4 1");
}

TEST(Cli, SolveNoVerdicts) {
  EXPECT_EQ(run("solve-nmc " + data("tri.graph") + " --k 1").status, 1);
  auto r = run("solve-asat " + data("two-unit.cnf") + " --k 0");
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_TRUE(has(r, "verdict: no"));
  EXPECT_EQ(run("solve-asat " + data("two-unit.cnf") + " --k 1 --verify").status, 0);
}

TEST(Cli, OtherSolvers) {
  auto r = run("solve-vcamm " + data("c4.graph") + " --k 0 --verify");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_TRUE(has(r, "matching: 2"));
  r = run("solve-emc " + data("tri.graph") + " --k 3 --verify");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(run("solve-emc " + data("tri.graph") + " --k 1").status, 1);
  EXPECT_EQ(run("solve-vcamm " + data("tri.graph") + " --k 1").status, 2);
}

TEST(Cli, Lp) {
  auto r = run("lp " + data("p3.graph"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r, "value: 1\n"));
  EXPECT_TRUE(has(r, "2 = 1\n"));
  r = run("lp " + data("tri.graph"));
  EXPECT_TRUE(has(r, "value: 3/2"));
  r = run("lp " + data("p3.graph") + " --pin 2");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r, "infeasible"));
}

TEST(Cli, Reduce) {
  auto r = run("reduce " + data("p4.graph"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r, "0 rule3 1 2"));
  r = run("reduce " + data("tri.graph") + " --k 2");
  EXPECT_TRUE(has(r, "verdict: irreducible"));
  EXPECT_TRUE(has(r, "terminals: 3 <= 4 (2k)"));
  r = run("reduce " + data("tri.graph") + " --k 1");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r, "no (rule1)"));
}

TEST(Cli, Generators) {
  auto r = run("gen-gadget " + data("two-parts.mis"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r, "\nk 4\n"));
  auto a = run("gen-random --n 8 --seed 7");
  auto b = run("gen-random --n 8 --seed 7");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("gen-random --n 8 --seed 8").out);
}

TEST(Cli, GeneratedGadgetFeedsLp) {
  std::string path = std::string(MWCUT_TMP) + "/gadget.graph";
  ASSERT_EQ(run("gen-gadget " + data("two-parts.mis") + " -o " + path).status, 0);
  auto r = run("lp " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r, "value: 4\n"));
}

TEST(Cli, InputErrors) {
  std::string mis = std::string(MWCUT_TMP) + "/singleton.mis";
  std::ofstream(mis) << "part 1\npart 2 3\ne 2 3\n";
  auto r = run("gen-gadget " + mis);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(has(r, "fewer than two"));
  r = run("solve-nmc /nonexistent --k 1");
  EXPECT_EQ(r.status, 2);
  r = run("solve-nmc " + data("p3.graph"));
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(has(r, "no budget"));
  r = run("solve-nmc " + data("p3.graph") + " --k 1 --mode fast");
  EXPECT_EQ(r.status, 2);
  r = run("bogus");
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, Stdin) {
  auto r = run("solve-nmc - --k 1 < " + data("p3.graph"));
  EXPECT_EQ(r.status, 0);
  std::string path = std::string(MWCUT_TMP) + "/bad.graph";
  std::ofstream(path) << "p nmc 2 1\ne 1 3\n";
  r = run("solve-nmc - --k 1 < " + path);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(has(r, "stdin:2:"));
}

}  // namespace
