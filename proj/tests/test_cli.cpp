#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "pstop/builders.hpp"
#include "pstop/cells.hpp"
#include "pstop/codec.hpp"
#include "pstop/cofibration.hpp"
#include "pstop/invariants.hpp"

using namespace pstop;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PSTOP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& rel) { return (fs::path(PSTOP_SAMPLES) / rel).string(); }

Space load(const std::string& rel) {
  std::ifstream in(sample(rel));
  return read_space(json::parse(in));
}

}  // namespace

TEST(Cli, Version) {
  const auto r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.0\n");
}

TEST(Cli, BuildGraphMatchesLibrary) {
  const auto r = run("build graph " + sample("p3.edges"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(read_space(json::parse(r.out)), path_space(2));
}

TEST(Cli, Pi0MatchesLibrary) {
  const auto r = run("invariants pi0 " + sample("c5.json"));
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["components"], pi0(load("c5.json")).count);
  EXPECT_EQ(doc["components"], 1);
}

TEST(Cli, ClassifyCounterexample) {
  const auto r = run("check classify " + sample("counterexample/hierarchy.json"));
  ASSERT_EQ(r.code, 0);
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["convergence"], true);
  EXPECT_EQ(doc["limit"], false);
  EXPECT_EQ(doc["pseudotopological"], false);
}

TEST(Cli, PinMatchesLibrary) {
  const auto r = run("invariants pin " + sample("c5.json") + " --n 1 --budgets 5,6");
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  doc.erase("base");
  doc.erase("limits");
  EXPECT_EQ(doc, pi_n(make_based(load("c5.json"), 0), 1, {5, 6}).to_json());
}

TEST(Cli, AxiomSuiteMatchesLibraryAndIsDeterministic) {
  const std::string args = "--seed 7 cofib axioms --suite i-category " + sample("");
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::pair<std::string, Space>> spaces;
  for (const char* name : {"c4", "c5", "i1", "i2", "i3", "point", "s0"})
    spaces.emplace_back(name, load(std::string(name) + ".json"));
  SuiteOptions opt;
  opt.seed = 7;
  const auto rep = verify_axioms(spaces, Suite::ICategory, opt);
  EXPECT_EQ(json::parse(a.out), rep.to_json());
  EXPECT_EQ(a.code, rep.verdict() == Verdict::Pass ? 0 : 1);
}

TEST(Cli, CellsPresentFromSamples) {
  const auto r = run("cells present " + sample("cells/circle.json"));
  ASSERT_EQ(r.code, 0);
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["topological"], false);
  doc.erase("topological");
  std::ifstream in(sample("cells/circle.json"));
  const auto p = read_presentation(json::parse(in), fs::path(sample("cells")));
  EXPECT_EQ(doc, p.to_json());
  EXPECT_TRUE(are_isomorphic(p.result(), cycle_space(4)));
}

TEST(Cli, WeqExitCodes) {
  EXPECT_EQ(run("cells weq " + sample("maps/c5_identity.json")).code, 0);
  EXPECT_EQ(run("cells weq " + sample("maps/point_to_s0.json")).code, 1);
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("build graph " + sample("missing.edges")).code, 2);
  EXPECT_EQ(run("homotopy chain " + sample("maps/end_inclusion.json")).code, 2);
  const fs::path bad = fs::temp_directory_path() / "pstop_cli_truncated.json";
  std::ofstream(bad) << "{\"points\": [\"a\"";
  EXPECT_EQ(run("invariants pi0 " + bad.string()).code, 2);
  fs::remove(bad);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, BudgetExitsThree) {
  EXPECT_EQ(run("cells serre " + sample("maps/c5_identity.json") + " --models 1:2 --square-cap 5")
                .code,
            3);
}

TEST(Cli, TextOutputIsFlat) {
  const auto r = run("--text invariants pi0 " + sample("c5.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("components = 1"), std::string::npos);
}
