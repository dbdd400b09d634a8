#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "amcurve/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = amcurve::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CheckReportsFailingAxiom) {
  const Outcome r = run({"check", "--sequence", "6,2,21"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(1) ok"), std::string::npos);
  EXPECT_NE(r.out.find("(2) ok"), std::string::npos);
  EXPECT_NE(r.out.find("(3) FAIL (42 >= 36)"), std::string::npos);
  EXPECT_NE(r.out.find("(4) ok"), std::string::npos);
}

TEST(Cli, CheckJson) {
  const Outcome r = run({"check", "--sequence", "6,4,17", "--json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["sequence"], json({"6", "4", "17"}));
  EXPECT_EQ(j["dchain"], json({"6", "2", "1"}));
  EXPECT_TRUE(j["axioms"]["3"].get<bool>());
}

TEST(Cli, FromChain) {
  const Outcome r = run({"from-chain", "--divisors", "6,2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6,4,17\n");
  EXPECT_EQ(run({"from-chain", "--divisors", "6,4,1"}).code, 2);
}

TEST(Cli, Enumerate) {
  const Outcome r = run({"enumerate", "--initial", "6"});
  EXPECT_EQ(r.out, "6,5\n6,4,17\n6,3,11\n");
  EXPECT_EQ(json::parse(run({"enumerate", "--initial", "4", "--json"}).out), json({{"4", "3"}, {"4", "2", "7"}}));
  EXPECT_EQ(run({"enumerate", "--initial", "1"}).code, 2);
}

TEST(Cli, Semigroup) {
  const Outcome r = run({"semigroup", "--generators", "6,4,17"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["conductor"], 20);
  EXPECT_EQ(j["frobenius"], 19);
  EXPECT_EQ(j["genus"], 10);
  EXPECT_EQ(j["gaps"], json({1, 2, 3, 5, 7, 9, 11, 13, 15, 19}));
  EXPECT_EQ(j["generators"], json({"6", "4", "17"}));
  const json members = json::parse(run({"semigroup", "--generators", "3,2", "--up-to", "5"}).out)["members"];
  EXPECT_EQ(members, json({0, 2, 3, 4, 5}));
  const Outcome even = run({"semigroup", "--generators", "4,6"});
  EXPECT_EQ(even.code, 1);
  EXPECT_TRUE(json::parse(even.out)["conductor"].is_null());
}

TEST(Cli, SemigroupGapListIsCapped) {
  const json j = json::parse(run({"semigroup", "--generators", "200,201"}).out);
  EXPECT_EQ(j["genus"], 199 * 200 / 2);
  EXPECT_EQ(j["gaps"].size(), 10000u);
  EXPECT_TRUE(j["gaps_truncated"].get<bool>());
}

TEST(Cli, Build) {
  const Outcome r = run({"build", "--sequence", "4,2,7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("f_3 = y^4 - 2*x*y^2 + x^2 - y"), std::string::npos);
  EXPECT_NE(r.out.find("x(t) = t^4 - t"), std::string::npos);
  const json j = json::parse(run({"build", "--sequence", "4,2,7", "--char", "2", "--json"}).out);
  EXPECT_EQ(j["domain"], "GF(2)");
  EXPECT_EQ(j["degrees"], json({1, 2, 4}));
  EXPECT_EQ(run({"build", "--sequence", "6,2,21"}).code, 1);
  EXPECT_EQ(run({"build", "--sequence", "4,2,7", "--char", "4"}).code, 2);
}

TEST(Cli, Decompose) {
  const Outcome r = run({"decompose", "--f", "(y^2-x)^2-y", "--g", "y^2-x", "--json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["degrees"], json({1, 2, 4}));
  EXPECT_EQ(j["sequence"], json({"4", "2", "7"}));
  EXPECT_EQ(run({"decompose", "--f", "y^2-x", "--g", "x"}).code, 1);
  EXPECT_EQ(run({"decompose", "--f", "y^2-x", "--g", "2x"}).code, 2);
  EXPECT_EQ(run({"decompose", "--f", "y", "--g", "x"}).code, 2);
}

TEST(Cli, VerifyJsonSchema) {
  const Outcome r = run({"verify", "--sequence", "4,2,7"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  for (const char* key : {"sequence", "dchain", "degrees", "intersections", "pairwise", "dlambda", "checks"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["intersections"], json({2, 7}));
  EXPECT_EQ(j["pairwise"], json({1, 7}));
  EXPECT_EQ(j["dlambda"][1][2], "7/8");
  for (const auto& [name, ok] : j["checks"].items()) EXPECT_TRUE(ok.get<bool>()) << name;
}

TEST(Cli, VerifyOracleAndSeedPrecedence) {
  const json flag = json::parse(run({"verify", "--sequence", "6,4,17", "--oracle-trials", "20", "--seed", "7"}).out);
  EXPECT_EQ(flag["oracle"]["seed"], 7);
  EXPECT_TRUE(flag["checks"]["oracle"].get<bool>());
  ::setenv("AMCURVE_SEED", "99", 1);
  const json env = json::parse(run({"verify", "--sequence", "6,4,17", "--oracle-trials", "20"}).out);
  const json both = json::parse(run({"verify", "--sequence", "6,4,17", "--oracle-trials", "20", "--seed", "7"}).out);
  ::setenv("AMCURVE_SEED", "junk", 1);
  const Outcome bad_env = run({"verify", "--sequence", "6,4,17", "--oracle-trials", "20"});
  ::unsetenv("AMCURVE_SEED");
  const json fixed = json::parse(run({"verify", "--sequence", "6,4,17", "--oracle-trials", "20"}).out);
  EXPECT_EQ(env["oracle"]["seed"], 99);
  EXPECT_EQ(both["oracle"]["seed"], 7);
  EXPECT_EQ(bad_env.code, 2);
  EXPECT_EQ(fixed["oracle"]["seed"], 42);
}

TEST(Cli, VerifyNonAmExitsOne) {
  EXPECT_EQ(run({"verify", "--sequence", "6,2,21"}).code, 1);
}

TEST(Cli, Nagata) {
  const Outcome r = run({"nagata", "--p", "2", "--a", "3", "--json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["computed"], json({"6", "2", "21"}));
  EXPECT_EQ(j["case"], "II");
  EXPECT_FALSE(j["axioms"]["3"].get<bool>());
  EXPECT_EQ(run({"nagata", "--p", "4", "--a", "3"}).code, 2);
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"frobnicate"}, {"check"}, {"check", "--sequence", "6,x"},
        {"check", "--sequence", "6,4", "--bogus"}, {"verify", "--sequence", "4,2,7", "--seed", "-3"}}) {
    const Outcome r = run(args);
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  }
}

TEST(Cli, HelpExitsZero) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, OutputIsStable) {
  const std::vector<std::string> args{"verify", "--sequence", "12,8,34,71", "--oracle-trials", "30", "--seed", "5"};
  EXPECT_EQ(run(args).out, run(args).out);
}
