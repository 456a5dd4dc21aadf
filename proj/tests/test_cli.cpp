#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + " " SRANK_BIN " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& name) { return std::string(SRANK_SAMPLES) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

// Rank 2 with a second singular value 1e-6 of the first.
std::string near_rank_one() {
  return write_temp("srank_near_rank_one.json",
                    R"({"n": 2, "k": 2, "entries": [{"idx": [1, 1], "re": 1.0}, {"idx": [2, 2], "re": 1e-6}]})");
}

}  // namespace

TEST(Cli, SRankOfExampleFour) {
  const CliResult r = run("srank " + sample("example4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, WitnessOfExampleFour) {
  const CliResult r = run("witness " + sample("example_w1.json"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("(1,2,3|4)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("1/12"), std::string::npos) << r.out;
}

TEST(Cli, ZeroTensorIsAnInputError) {
  const CliResult r = run("srank " + sample("zero.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("zero tensor"), std::string::npos) << r.out;
}

TEST(Cli, SimpleExitCodes) {
  EXPECT_EQ(run("simple " + sample("example3.json")).code, 0);
  EXPECT_EQ(run("simple " + sample("example2.json")).code, 0);
  EXPECT_EQ(run("simple " + sample("example1.json")).code, 3);
  EXPECT_EQ(run("simple " + sample("bell.json")).code, 3);
  EXPECT_EQ(run("witness " + sample("example3.json")).code, 0);
}

TEST(Cli, JsonReportIsDeterministic) {
  const CliResult a = run("simple --json " + sample("example1.json"));
  const CliResult b = run("simple --json " + sample("example1.json"));
  EXPECT_EQ(a.code, 3);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"schema\": 1"), std::string::npos);
  const CliResult c = run("slater --json " + sample("example4.json"));
  EXPECT_EQ(c.out, run("slater --json " + sample("example4.json")).out);
}

TEST(Cli, EpsilonOverride) {
  const std::string f = near_rank_one();
  EXPECT_EQ(run("srank " + f).out, "2\n");
  EXPECT_EQ(run("srank --epsilon 1e-3 " + f).out, "1\n");
  EXPECT_EQ(run("srank " + f, "SRANK_EPSILON=1e-3").out, "1\n");
  EXPECT_EQ(run("srank --epsilon 1e-12 " + f, "SRANK_EPSILON=1e-3").out, "2\n");
  EXPECT_EQ(run("simple --epsilon 1e-3 " + f).code, 0);
  EXPECT_EQ(run("witness --epsilon 1e-3 " + f).code, 0);
  EXPECT_EQ(run("schmidt --epsilon 1e-3 " + f).out.rfind("schmidt rank 1", 0), 0u);
  EXPECT_EQ(run("srank " + f, "SRANK_EPSILON=nope").code, 1);
}

TEST(Cli, Decompositions) {
  const CliResult s = run("slater " + sample("example4.json"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("youla: slater rank 2"), std::string::npos) << s.out;
  const CliResult t = run("slater " + sample("example1.json"));
  EXPECT_NE(t.out.find("takagi: slater rank 2"), std::string::npos) << t.out;
  const CliResult b = run("schmidt " + sample("bell.json"));
  EXPECT_NE(b.out.find("schmidt rank 2"), std::string::npos) << b.out;
  EXPECT_EQ(run("slater " + sample("bell.json")).code, 1);
}

TEST(Cli, ClassFlag) {
  EXPECT_EQ(run("srank --class symmetric " + sample("example1.json")).out, "2\n");
  EXPECT_EQ(run("srank --class antisymmetric " + sample("example1.json")).code, 1);
  EXPECT_EQ(run("srank --class bosonic " + sample("example1.json")).code, 1);
}

TEST(Cli, Project) {
  const CliResult r = run("project --class symmetric " + sample("product.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"symmetry\": \"symmetric\""), std::string::npos);
  EXPECT_EQ(run("project " + sample("product.json")).code, 1);
}

TEST(Cli, Young) {
  const CliResult c = run("young-classify " + sample("young_v_alpha1.json") + " --tableau " + sample("tableau_alpha1.json"));
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out.rfind("simple", 0), 0u) << c.out;
  EXPECT_EQ(run("young-classify " + sample("product.json") + " --tableau " + sample("tableau_alpha1.json")).code, 1);
  const CliResult p = run("young-project " + sample("product.json") + " --tableau " + sample("tableau_alpha1.json"));
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("\"entries\""), std::string::npos);
  EXPECT_EQ(run("young-project " + sample("product.json")).code, 1);
}

TEST(Cli, JamRank) {
  EXPECT_EQ(run("jam-rank " + sample("boson_simple.json")).out, "1 (simple)\n");
  EXPECT_EQ(run("jam-rank " + sample("example4.json")).out, "16 (entangled)\n");
  EXPECT_EQ(run("jam-rank " + sample("example3.json")).out, "4 (simple)\n");
}

TEST(Cli, BadInput) {
  EXPECT_EQ(run("srank " + write_temp("srank_bad.json", "{ not json")).code, 1);
  EXPECT_EQ(run("srank /nonexistent/file.json").code, 1);
  EXPECT_EQ(run("frobnicate x").code, 1);
}
