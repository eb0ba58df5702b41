#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lpi/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lpi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lpi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lpi_test_" + name)).string();
}

const std::string data_dir = LPI_DATA_DIR;

}  // namespace

TEST(Cli, CountPrintsRecord) {
  const auto r = run({"count", "--curve", "n", "--s", "2", "--N", "2", "--method", "brute", "--no-timing"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"count\":\"6\""), std::string::npos) << r.out;
}

TEST(Cli, Lemma3DefaultsToCubicCurve) {
  const auto r = run({"count", "--method", "lemma3", "--z", "1,5,19", "--N", "6"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"curve\":\"n,n^2,n^3\""), std::string::npos) << r.out;
  EXPECT_EQ(run({"count", "--curve", "n,n^2", "--method", "lemma3", "--z", "1,5,19", "--N", "6"}).code, 1);
}

TEST(Cli, CacheHitIsFlagged) {
  const std::string cache = temp_path("cache.jsonl");
  std::remove(cache.c_str());
  const std::vector<std::string> args = {"--cache", cache, "count", "--curve", "n^2", "--s", "2", "--N", "7"};
  const auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_NE(first.out.find("\"cached\":false"), std::string::npos);
  const auto second = run(args);
  ASSERT_EQ(second.code, 0) << second.err;
  EXPECT_NE(second.out.find("\"cached\":true"), std::string::npos) << second.out;
  std::remove(cache.c_str());
}

TEST(Cli, HypothesisViolationsExitOne) {
  EXPECT_EQ(run({"count", "--curve", "n^2", "--method", "lemma1", "--z", "0", "--N", "5"}).code, 1);
  EXPECT_EQ(run({"exponent", "--family", "dirac", "--N", "8"}).code, 1);
  EXPECT_EQ(run({"count", "--N", "8,4"}).code, 1);
  EXPECT_EQ(run({"count", "--curve", "n^2,n^2", "--N", "4"}).code, 1);
  EXPECT_EQ(run({"count", "--inject-fault", "count-offset", "--N", "4"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, BudgetExitsTwo) {
  EXPECT_EQ(run({"--budget-tuples", "10", "count", "--curve", "n^2", "--s", "3", "--N", "20", "--method", "brute"}).code,
            2);
  const auto r = run({"refine", "--curve", "n,n^2", "--N", "16", "--k", "2", "--E", data_dir + "/demo_E.txt", "--F",
                      data_dir + "/demo_F.txt", "--tower-budget", "3"});
  EXPECT_EQ(r.code, 2) << r.out << r.err;
}

TEST(Cli, VerifyDetectsInjectedFault) {
  EXPECT_EQ(run({"verify", "--seed", "3"}).code, 0);
  const auto r = run({"verify", "--suite", "dio_count", "--inject-fault", "count-offset"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos) << r.out;
  const auto s = run({"verify", "--suite", "analysis", "--inject-fault", "shear-sign"});
  EXPECT_NE(s.code, 0);
  EXPECT_NE(s.out.find("shear"), std::string::npos) << s.out;
}

TEST(Cli, RefineDemo) {
  const auto r = run({"refine", "--curve", "n,n^2", "--N", "16", "--k", "2", "--E", data_dir + "/demo_E.txt", "--F",
                      data_dir + "/demo_F.txt"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("\"ok\":true"), std::string::npos);
}

TEST(Cli, RefineTrivialRegime) {
  const std::string e = temp_path("E.txt"), f = temp_path("F.txt");
  std::ofstream(e) << "0 0\n";
  std::ofstream(f) << "100 100\n";
  const auto r = run({"refine", "--curve", "n,n^2", "--N", "4", "--k", "1", "--E", e, "--F", f});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alpha = 0"), std::string::npos) << r.out;
  std::remove(e.c_str());
  std::remove(f.c_str());
}

TEST(Cli, ConfigFileFillsUnsetOptions) {
  const std::string cfg = temp_path("cfg.ini");
  std::ofstream(cfg) << "# test\ncurve = n\nN = 2\nmethod = brute\n";
  const auto r = run({"--config", cfg, "--no-timing", "count", "--s", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"count\":\"6\""), std::string::npos) << r.out;
  std::remove(cfg.c_str());
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  const std::vector<std::string> count = {"--no-timing", "count", "--curve", "n,n^2", "--s", "2", "--N", "6,9,12"};
  auto a = count, b = count;
  a.insert(a.begin(), {"--threads", "1"});
  b.insert(b.begin(), {"--threads", "8"});
  EXPECT_EQ(run(a).out, run(b).out);
  const std::vector<std::string> refine = {"refine", "--curve", "n,n^2", "--N", "16", "--k", "2",
                                           "--E", data_dir + "/demo_E.txt", "--F", data_dir + "/demo_F.txt"};
  a = refine;
  b = refine;
  a.insert(a.begin(), {"--no-timing", "--threads", "1"});
  b.insert(b.begin(), {"--no-timing", "--threads", "8"});
  EXPECT_EQ(run(a).out, run(b).out);
}

TEST(Cli, AuditSelectionIsDeterministic) {
  int hits = 0;
  for (int i = 0; i < 5000; ++i) hits += lpi::cli::CountCache::audit_selected("key" + std::to_string(i), 1);
  EXPECT_GT(hits, 10);
  EXPECT_LT(hits, 120);
  EXPECT_EQ(lpi::cli::CountCache::audit_selected("abc", 4), lpi::cli::CountCache::audit_selected("abc", 4));
}

TEST(Cli, HelpPrintsUsage) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Subcommands"), std::string::npos) << r.out;
  const auto c = run({"count", "--help"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("--method"), std::string::npos) << c.out;
}
