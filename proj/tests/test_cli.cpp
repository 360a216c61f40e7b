#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(RAINBOW_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string tmp(const std::string& name) { return std::string(RAINBOW_TMP) + "/cli_" + name; }

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, GenerateAnalyzeConstructVerify) {
  const std::string graph = tmp("tower.txt");
  const std::string coloring = tmp("tower.json");
  ASSERT_EQ(run("gen --family clique-tower --kappa 3 --layers 5 --out " + graph).code, 0);
  const CliResult analyze = run("analyze --graph " + graph);
  ASSERT_EQ(analyze.code, 0);
  const auto a = nlohmann::json::parse(analyze.out);
  EXPECT_EQ(a["n"], 18);
  EXPECT_EQ(a["kappa"], 3);
  EXPECT_EQ(a["diameter"], 6);

  const CliResult construct = run("construct --mode diameter --graph " + graph + " --coloring-out " + coloring);
  ASSERT_EQ(construct.code, 0);
  const auto c = nlohmann::json::parse(construct.out);
  EXPECT_EQ(c["outcome"]["verified"], true);
  EXPECT_EQ(c["outcome"]["bound_met"], true);
  EXPECT_EQ(c["report"]["kappa"], 3);

  EXPECT_EQ(run("verify --graph " + graph + " --coloring " + coloring).code, 0);
  EXPECT_EQ(run("verify --serial --graph " + graph + " --coloring " + coloring).code, 0);
}

TEST(Cli, VerifyFailureExitsTwo) {
  const std::string graph = tmp("c6.txt");
  const std::string coloring = tmp("c6_mono.json");
  write(graph, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
  write(coloring,
        R"({"n":6,"colors":1,"edges":[{"u":0,"v":1,"c":1},{"u":0,"v":5,"c":1},{"u":1,"v":2,"c":1},)"
        R"({"u":2,"v":3,"c":1},{"u":3,"v":4,"c":1},{"u":4,"v":5,"c":1}]})");
  const CliResult r = run("verify --graph " + graph + " --coloring " + coloring);
  EXPECT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verified"], false);
  EXPECT_EQ(j["failing_pair"], nlohmann::json::array({0, 2}));
}

TEST(Cli, PlanarSolids) {
  const std::string rot = tmp("ico.rot");
  ASSERT_EQ(run("gen --family named --name icosahedron --out " + tmp("ico.txt") + " --rotation-out " + rot).code, 0);
  const CliResult r = run("construct --mode planar --rotation " + rot);
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["report"]["kappa"], 5);
  EXPECT_EQ(j["report"]["t"], 2);
}

TEST(Cli, RcExact) {
  const std::string graph = tmp("c7.txt");
  ASSERT_EQ(run("gen --family named --name C7 --out " + graph).code, 0);
  const CliResult r = run("rc-exact --graph " + graph);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["rc"], 4);
  EXPECT_EQ(run("rc-exact --budget 2 --graph " + graph).code, 3);
  EXPECT_EQ(run("rc-exact --work-cap 5 --graph " + tmp("c7.txt")).code, 3);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
  EXPECT_EQ(run("analyze --graph " + tmp("missing.txt")).code, 1);
  const std::string bad = tmp("bad.txt");
  write(bad, "2 1\n0 2\n");
  EXPECT_EQ(run("analyze --graph " + bad).code, 1);
  const std::string c5 = tmp("c5.txt");
  write(c5, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  EXPECT_EQ(run("construct --mode diameter --graph " + c5).code, 1);
}

TEST(Cli, PrettyOutput) {
  const std::string graph = tmp("k5.txt");
  ASSERT_EQ(run("gen --family named --name K5 --out " + graph).code, 0);
  const CliResult r = run("analyze --pretty --graph " + graph);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("kappa: 4"), std::string::npos);
}
