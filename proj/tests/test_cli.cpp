#include "rhc.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace rhc;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string command = std::string(RHC_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rhc_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenRoundTrip) {
  for (const std::string kind : {"union 3", "synthetic 30 0.5 --seed 4", "synthetic 30 0.5 4"}) {
    auto r = run("gen " + kind);
    ASSERT_EQ(r.code, 0) << kind;
    std::istringstream in(r.out);
    std::ostringstream again;
    write_hypergraph(again, read_hypergraph(in));
    EXPECT_EQ(again.str(), r.out) << kind;
  }
  auto g = run("gen kneser 5 2");
  ASSERT_EQ(g.code, 0);
  std::istringstream in(g.out);
  auto petersen = read_graph(in);
  EXPECT_EQ(petersen, kneser_graph(5, 2));
  std::ostringstream again;
  write_graph(again, petersen);
  EXPECT_EQ(again.str(), g.out);
}

TEST_F(Cli, GenExamples) {
  auto u = run("gen union 2");
  EXPECT_EQ(u.out, "rooted-hg 4 1\n1 2 3 3\n");
  EXPECT_EQ(run("gen synthetic 20 0.4 7").out, run("gen synthetic 20 0.4 --seed 7").out);
  EXPECT_EQ(run("gen union 0").code, 2);
  EXPECT_EQ(run("gen kneser 3 2").code, 2);
  EXPECT_EQ(run("gen").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST_F(Cli, ContainThenReconstruct) {
  const auto hg = write("u3.hg", run("gen union 3").out);
  const auto iset = write("i.fam", "family 3\n1\n2\n4\n");
  const std::string params = " --relaxed --s 1 --t 1 --z 1";
  auto contained = run("contain " + hg + " " + iset + params + " --json");
  ASSERT_EQ(contained.code, 0);
  const auto run_json = Json::parse(contained.out);
  EXPECT_EQ(run_json["degree_rule"], "head-link-edges");
  const auto fp = write("run.json", contained.out);
  auto rebuilt = run("reconstruct " + hg + " " + fp);
  ASSERT_EQ(rebuilt.code, 0);
  EXPECT_EQ(Json::parse(rebuilt.out)["C"].dump(), run_json["C"].dump());
  EXPECT_EQ(rebuilt.out, "{\"C\":" + run_json["C"].dump() + "}\n");

  // same through the iterated record
  auto iterated = run("contain " + hg + " " + iset + " --relaxed --s 1 --t 1 --z 1 --N 1/20 --json --iterate");
  ASSERT_EQ(iterated.code, 0);
  const auto record = Json::parse(iterated.out);
  const auto fp2 = write("record.json", iterated.out);
  EXPECT_EQ(Json::parse(run("reconstruct " + hg + " " + fp2).out)["C"], record["C"]);
}

TEST_F(Cli, ContainOnSyntheticHosts) {
  for (int seed = 1; seed <= 5; ++seed) {
    const auto hg = write("s.hg", run("gen synthetic 40 0.7 " + std::to_string(seed)).out);
    const auto iset = write("empty.vset", "vset 40\n");
    auto contained = run("contain " + hg + " " + iset + " --relaxed --s 2 --t 3 --z 2 --mode greedy --json");
    ASSERT_EQ(contained.code, 0);
    const auto fp = write("run.json", contained.out);
    EXPECT_EQ(Json::parse(run("reconstruct " + hg + " " + fp).out)["C"], Json::parse(contained.out)["C"]);
  }
}

TEST_F(Cli, ContainExamplesAndErrors) {
  const auto edgeless = write("e.hg", "rooted-hg 5 1\n");
  const auto some = write("some.vset", "vset 5\n1\n3\n");
  auto r = run("contain " + edgeless + " " + some + " --relaxed --s 1 --t 1 --z 1 --json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["C"], Json::parse("[0,1,2,3,4]"));

  const auto hg = write("u2.hg", "rooted-hg 4 1\n1 2 3 3\n");
  const auto dependent = write("dep.vset", "vset 4\n1\n2\n3\n");
  EXPECT_EQ(run("contain " + hg + " " + dependent + " --relaxed").code, 2);
  const auto malformed = write("bad.hg", "rooted-hg 4 1\n1 2 3\n");
  EXPECT_EQ(run("contain " + malformed + " " + some).code, 2);
  EXPECT_EQ(run("contain " + hg + " /nonexistent/file").code, 2);
  EXPECT_EQ(run("contain " + hg + " " + write("ok.vset", "vset 4\n1\n2\n") + " --eps banana").code, 2);

  auto trace = run("contain " + hg + " " + write("i.vset", "vset 4\n1\n2\n") + " --relaxed --s 1 --t 1 --z 1 --json");
  ASSERT_EQ(trace.code, 0);
  const auto step = Json::parse(trace.out)["trace"][0];
  EXPECT_EQ(step["phase"], "I");
  EXPECT_EQ(step["v"], 3);
  EXPECT_EQ(step["in_I"], false);
}

TEST_F(Cli, Census) {
  EXPECT_EQ(run("census 2").out, "{\"n\":2,\"alpha\":14}\n");
  EXPECT_EQ(Json::parse(run("census 3 --threads 3").out)["alpha"], 124);
  EXPECT_EQ(run("census 9").code, 2);
}

TEST_F(Cli, Spectra) {
  auto r = run("spectra 5 2");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["N"], 10);
  EXPECT_EQ(j["D"], 3);
  EXPECT_EQ(j["lambda_formula"], -2);
  EXPECT_NEAR(j["lambda_computed"].get<double>(), -2.0, 1e-9);
  auto eml = Json::parse(run("spectra 7 2 --eml --samples 300").out);
  EXPECT_EQ(eml["eml"]["holds"], true);
  EXPECT_EQ(eml["eml"]["subsets_checked"], 300);
  EXPECT_EQ(run("spectra 3 2").code, 2);
}

TEST_F(Cli, Bounds) {
  auto r = run("bounds 2 0.004");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["lower_exponent"], 2);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["alpha"], 14);
  EXPECT_GT(j["crossover_log2_n"].get<double>(), 100);
  EXPECT_EQ(run("bounds 2 0.01").code, 2);
  auto c = Json::parse(run("count-bound --M 1000 --eps 1/10 --s 100 --t 8000").out);
  EXPECT_DOUBLE_EQ(c["tau"].get<double>(), 0.025);
}

TEST_F(Cli, AuditAndVerify) {
  const auto pairs = write("pairs.fam", "family 3\n0b011\n0b101\n0b110\n");
  auto a = run("audit 3 " + pairs);
  ASSERT_EQ(a.code, 0);
  auto j = Json::parse(a.out);
  EXPECT_EQ(j["good_total"], 6);
  EXPECT_EQ(j["permutations"], 6);
  EXPECT_EQ(run("audit 4 " + pairs).code, 2);
  const auto with_empty = write("e.fam", "family 2\n0\n1\n");
  EXPECT_EQ(run("audit 2 " + with_empty + " --exclude-empty").code, 1);
  EXPECT_EQ(run("audit 2 " + with_empty).code, 0);

  EXPECT_EQ(run("verify " + pairs).code, 0);
  EXPECT_EQ(run("verify " + write("u.fam", "family 2\n1\n2\n3\n")).code, 1);
  const auto hg = write("u3.hg", run("gen union 3").out);
  EXPECT_EQ(Json::parse(run("verify " + hg).out)["rooted"], true);
  const auto not_rooted = write("nr.hg", "rooted-hg 4 1\n0 1 2 2\n0 1 3 3\n");
  auto v = run("verify " + not_rooted);
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(Json::parse(v.out)["witness_pair"], Json::parse("[0,1]"));
  EXPECT_EQ(run("verify " + not_rooted + " --r 2").code, 0);
}
