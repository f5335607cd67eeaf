#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperecc/dist_approx.hpp"

#ifndef HYPERECC_CLI
#error "HYPERECC_CLI must name the hyperecc executable"
#endif

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(HYPERECC_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> rows(const std::string& tsv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(tsv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, StatsOnPath) {
  const CliRun r = run("stats --gen path:5");
  ASSERT_EQ(r.code, 0);
  const auto t = rows(r.out);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0], (std::vector<std::string>{"graph", "n", "m", "center_size", "avg_degree", "rad", "diam",
                                            "center_diam", "center_connected", "delta4"}));
  EXPECT_EQ(t[1], (std::vector<std::string>{"path:5", "5", "4", "1", "1.60", "2", "4", "0", "yes", "0.0"}));
}

TEST(Cli, StatsOnGridMatchesHandValues) {
  const auto t = rows(run("stats --gen grid:10x10").out);
  ASSERT_EQ(t.size(), 2u);
  // 10x10 grid: rad 10 from the four middle vertices, diam 18, delta4 9.
  EXPECT_EQ(t[1][1], "100");
  EXPECT_EQ(t[1][2], "180");
  EXPECT_EQ(t[1][3], "4");
  EXPECT_EQ(t[1][5], "10");
  EXPECT_EQ(t[1][6], "18");
  EXPECT_EQ(t[1][7], "2");
  EXPECT_EQ(t[1][8], "yes");
  EXPECT_EQ(t[1][9], "9.0");
}

TEST(Cli, StatsBudgetGivesPartialRow) {
  const CliRun r = run("stats --gen grid:10x10 --budget 10");
  EXPECT_EQ(r.code, 3);
  const auto t = rows(r.out);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1][1], "100");
  EXPECT_EQ(t[1][5], "-");
  EXPECT_EQ(t[1][9].back(), '*');
}

TEST(Cli, TreesOnCycleAndTree) {
  const auto c6 = rows(run("trees --gen cycle:6").out);
  ASSERT_EQ(c6.size(), 4u);
  EXPECT_EQ(c6[1][1], "T1");
  EXPECT_EQ(c6[1][2], "2");
  EXPECT_EQ(c6[1][10], "2");
  const auto tree = rows(run("trees --gen tree:40 --seed 3").out);
  ASSERT_EQ(tree.size(), 4u);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_EQ(tree[i][10], "0");
    EXPECT_EQ(tree[i][12], "0:100.0");
  }
}

TEST(Cli, DistancesOnCycleAndTree) {
  const auto c6 = rows(run("distances --gen cycle:6").out);
  ASSERT_GE(c6.size(), 2u);
  const auto& last = c6.back();
  EXPECT_EQ(last[3], "2");
  EXPECT_EQ(last[4], "2");
  EXPECT_EQ(last[6], "yes");
  const auto tree = rows(run("distances --gen tree:30").out);
  ASSERT_EQ(tree.size(), 2u);
  EXPECT_EQ(tree[1][3], "0");
  EXPECT_EQ(tree[1][4], "0");
  EXPECT_EQ(tree[1][5], "0.000");
}

TEST(Cli, DistancesModesAndDump) {
  const auto out = std::filesystem::temp_directory_path() / "hyperecc_cli_dump.bin";
  const CliRun r = run("distances --gen grid:4x4 --root 0 --delta 3 --out " + out.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(out, std::ios::binary);
  const auto est = hyperecc::DistanceEstimate::read_binary(in);
  EXPECT_EQ(est.n(), 16u);
  EXPECT_EQ(est(0, 15), 6u);
  std::filesystem::remove(out);

  const auto rho = rows(run("distances --gen cycle:7 --rho 2").out);
  ASSERT_EQ(rho.size(), 2u);
  EXPECT_EQ(rho[1][2], "estimated");
  EXPECT_EQ(rho[1][6], "yes");

  const auto sampled = rows(run("distances --gen random:60:0.08 --sample 5").out);
  ASSERT_GE(sampled.size(), 2u);
  EXPECT_EQ(sampled[1][2], "sampled*");
  EXPECT_EQ(sampled.back()[6], "yes");
}

TEST(Cli, Hyperbolicity) {
  const auto t = rows(run("hyperbolicity --gen cycle:4").out);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1][2], "1.0");
  EXPECT_EQ(t[1][3], "4");
  EXPECT_EQ(t[1][4], "0,1,2,3");
  EXPECT_EQ(run("hyperbolicity --gen grid:12x12").code, 3);
  const auto sampled = rows(run("hyperbolicity --gen grid:12x12 --sample 5000").out);
  EXPECT_EQ(sampled[1][5], "no");
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --gen path:5").code, 0);
  EXPECT_EQ(run("verify --gen cycle:6").code, 0);
  EXPECT_EQ(run("verify --gen complete:5").code, 0);
  EXPECT_EQ(run("verify --gen grid:8x8").code, 0);
  const CliRun bad = run("verify --gen cycle:6 --inject-fault");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("dist.guarantee"), std::string::npos);
  EXPECT_NE(bad.out.find("pair ("), std::string::npos);
}

TEST(Cli, UsageAndParseErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("stats").code, 2);
  EXPECT_EQ(run("stats --gen nonsense:3").code, 2);
  EXPECT_EQ(run("stats --gen path:4 --input x.txt").code, 2);
  EXPECT_EQ(run("frobnicate --gen path:4").code, 2);
  EXPECT_EQ(run("distances --gen path:4 --root 9").code, 2);
  const auto bad = temp_file("hyperecc_cli_bad.txt", "1 2\n3\n");
  EXPECT_EQ(run("stats --input " + bad.string()).code, 2);
  std::filesystem::remove(bad);
  EXPECT_EQ(run("stats --input /nonexistent/graph.txt").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, LabelledInputKeepsLargestComponent) {
  const auto f = temp_file("hyperecc_cli_cc.txt", "# two pieces\n10 11\n11 12\n12 13\n50 51\n");
  const CliRun r = run("stats --input " + f.string());
  ASSERT_EQ(r.code, 0);
  const auto t = rows(r.out);
  EXPECT_EQ(t[1][1], "4");
  EXPECT_EQ(t[1][2], "3");
  const auto d = rows(run("distances --input " + f.string() + " --root 13").out);
  EXPECT_EQ(d[1][1], "13");
  std::filesystem::remove(f);
}

TEST(Cli, SameSeedSameBytes) {
  for (const char* cmd : {"stats --gen random-batch:5:10:30", "trees --gen random:35:0.1 --seed 9",
                          "distances --gen random:30:0.15 --seed 4"}) {
    EXPECT_EQ(run(cmd).out, run(cmd).out) << cmd;
  }
}
