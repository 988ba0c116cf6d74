#include <gtest/gtest.h>

#include <sstream>

#include "../tools/cli.hpp"
#include "subsum/verdict.hpp"

using namespace subsum;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json without_timing(Json j) {
  if (j.is_array()) {
    for (auto& e : j) e.erase("elapsed_ms");
  } else {
    j.erase("elapsed_ms");
  }
  return j;
}

}  // namespace

TEST(Cli, SigmaExample) {
  const auto r = run_cli({"sigma", "--group", "Z9", "--set", "1,3,6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{0,1,3,4,6,7}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("6 elements"), std::string::npos);
}

TEST(Cli, SetNotations) {
  const auto braces = run_cli({"--json", "hhat", "--group", "Z8", "--set", "{1,2,3,4}", "--h", "2"});
  ASSERT_EQ(braces.code, 0) << braces.err;
  EXPECT_EQ(Json::parse(braces.out)["result"], Json::parse("[3,4,5,6,7]"));

  const auto tuples = run_cli({"--json", "sigma", "--group", "Z2xZ4", "--set", "(1,0),(0,1)"});
  ASSERT_EQ(tuples.code, 0) << tuples.err;
  EXPECT_EQ(Json::parse(tuples.out)["result"], Json::parse("[1,2,3]"));

  const auto pc = run_cli({"--json", "paircover", "--group", "Z6", "--set", "1,3,4"});
  EXPECT_EQ(Json::parse(pc.out)["result"], Json::parse("[1,3,4,5]"));
}

TEST(Cli, Lemma2JsonRefutedExitsOne) {
  const auto r = run_cli({"verify", "lemma2", "--group", "Z6", "--json"});
  EXPECT_EQ(r.code, 1);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "refuted");
  EXPECT_EQ(j["statement"], "lemma2-search");
  bool found = false;
  for (const auto& w : j["witnesses"]) found |= w == Json::parse("[1,2,3]");
  EXPECT_TRUE(found);
}

TEST(Cli, CriticalNumberExample) {
  const auto r = run_cli({"verify", "thm5", "--group", "Z8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("c=5"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"sigma", "--group", "Z9"}).code, 2);
  EXPECT_EQ(run_cli({"sigma", "--group", "Q8", "--set", "1"}).code, 2);
  EXPECT_EQ(run_cli({"sigma", "--group", "Z9", "--set", "1,9"}).code, 2);
  EXPECT_EQ(run_cli({"hhat", "--group", "Z9", "--set", "1", "--h", "-1"}).code, 2);
  EXPECT_EQ(run_cli({"construct", "even-ce", "--m", "5"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "thm4", "--m", "11"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "lemma2", "--group", "Z2xZ4"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "sweep", "--statement", "bogus", "--order-range", "1..4"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "sweep", "--statement", "thm5", "--order-range", "4-8"}).code, 2);
  EXPECT_EQ(run_cli({"--jobs", "0", "verify", "prop3", "--group", "Z5"}).code, 2);
}

TEST(Cli, BudgetExitsThree) {
  const auto r = run_cli({"verify", "thm1", "--group", "Z30"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(run_cli({"--budget", "8", "verify", "prop3", "--group", "Z9"}).code, 3);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, Constructions) {
  const auto tight = run_cli({"--json", "construct", "tight", "--k", "5"});
  ASSERT_EQ(tight.code, 0) << tight.err;
  const auto j = Json::parse(tight.out);
  EXPECT_EQ(j["subset"], Json::parse("[1,3,6,9,12]"));
  EXPECT_EQ(j["group"], "Z15");
  EXPECT_EQ(run_cli({"construct", "mod4-ce", "--m", "10"}).code, 0);
  EXPECT_EQ(run_cli({"construct", "near-tight", "--group", "Z2xZ4"}).code, 0);
}

TEST(Cli, GroupsListing) {
  const auto r = run_cli({"groups", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "Z8\nZ2xZ4\nZ2xZ2xZ2\n");
}

TEST(Cli, VerifiedExitsZero) {
  EXPECT_EQ(run_cli({"verify", "prop3", "--group", "Z2xZ4"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "thm1", "--group", "Z12"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "thm4", "--m", "12"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "lemma2", "--m", "9"}).code, 0);
}

TEST(Cli, SweepEmitsArray) {
  const auto r = run_cli({"--json", "verify", "sweep", "--statement", "thm5", "--order-range", "4..8"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 8u);  // Z4, Z2^2, Z5, Z6, Z7, Z8, Z2xZ4, Z2^3
  const auto lemma = run_cli({"verify", "sweep", "--statement", "lemma2-search", "--order-range", "5..6"});
  EXPECT_EQ(lemma.code, 1);
}

TEST(Cli, CertificateRoundTripIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "verify", "lemma2", "--m", "10"},
           {"--json", "verify", "thm1", "--group", "Z2xZ6"},
           {"--json", "verify", "thm5", "--group", "Z2xZ4"},
           {"--json", "--symmetry", "verify", "thm4", "--m", "12"},
           {"--json", "verify", "prop3", "--group", "Z3xZ3"}}) {
    const auto r = run_cli(args);
    const auto text = r.out.substr(0, r.out.size() - 1);  // trailing newline
    EXPECT_EQ(render(to_json(verdict_from_json(Json::parse(text)))), text);
  }
}

TEST(Cli, JobsDoNotChangeCertificates) {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"verify", "lemma2", "--m", "14"},
           {"verify", "thm1", "--group", "Z12"},
           {"verify", "sweep", "--statement", "thm5", "--order-range", "4..12"}}) {
    auto args = base;
    args.insert(args.begin(), "--json");
    const auto one = without_timing(Json::parse(run_cli(args).out));
    for (const char* jobs : {"2", "3", "5"}) {
      auto with_jobs = args;
      with_jobs.insert(with_jobs.begin(), {"--jobs", jobs});
      EXPECT_EQ(without_timing(Json::parse(run_cli(with_jobs).out)), one) << jobs;
    }
  }
}
