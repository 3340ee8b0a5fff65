#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "app.hpp"

namespace addbase::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kOneFive = "E={1,5}; m=6; R={0}; N0=0";

TEST(Cli, AnalyzeOneFiveModSix) {
  auto r = call({"analyze", kOneFive});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("is_basis:  true"), std::string::npos);
  EXPECT_NE(r.out.find("order:     4"), std::string::npos);

  r = call({"analyze", kOneFive, "--json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["is_basis"], true);
  EXPECT_EQ(j["order"], 4);
  EXPECT_EQ(j["diff_gcd"], 1);
  EXPECT_TRUE(j["failure_reason"].is_null());
}

TEST(Cli, AnalyzeNonBasisIsNotAnError) {
  auto r = call({"--json", "analyze", "6N"});
  EXPECT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failure_reason"], "GcdExceedsOne(6)");
  EXPECT_TRUE(j["order"].is_null());
}

TEST(Cli, EssentialSubsetsJson) {
  auto r = call({"essential-subsets", kOneFive, "--json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["members"], nlohmann::json({1, 5}));
  EXPECT_EQ(j[0]["d_value"], 6);
  EXPECT_EQ(j[0]["witness_primes"], nlohmann::json({2, 3}));
}

TEST(Cli, VerifyEvens) {
  auto r = call({"verify", "naturals", "--p", "evens"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "true\n");
  r = call({"verify", kOneFive, "--p", "E={1}"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "false (complement is a basis)\n");
}

TEST(Cli, OrderAndElements) {
  EXPECT_EQ(call({"order", kOneFive}).out, "4\n");
  EXPECT_EQ(call({"essential-elements", "E={3,5}; m=6; R={0}"}).out, "{5}\n");
}

TEST(Cli, TraceJson) {
  auto r = call({"trace", "E={6,10,15}; m=30; R={0}", "--json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["i_tilde"], nlohmann::json({1, 2, 3}));
  EXPECT_EQ(j["alpha"], 1);
  EXPECT_EQ(j["lambda_set"], nlohmann::json({6}));
}

TEST(Cli, OracleAgrees) {
  auto r = call({"oracle", kOneFive, "--json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["empirical_order"]["order"], 4);
  EXPECT_EQ(j["agrees"], true);
  EXPECT_EQ(j["sumsets"].size(), 5u);

  r = call({"oracle", "6N", "--window", "100:400", "--h-max", "6"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("NoneUpTo(6)"), std::string::npos);
  EXPECT_NE(r.out.find("agrees:          yes"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"analyze", "E={1,5; m=6"}).code, kInputError);
  EXPECT_EQ(call({"analyze", "E={}; m=6; R={7}; N0=0"}).code, kInputError);
  EXPECT_EQ(call({"order", "6N"}).code, kPrecondition);
  EXPECT_EQ(call({"essential-subsets", "E={1,5}"}).code, kPrecondition);
  EXPECT_EQ(call({"verify", "naturals"}).code, kInputError);
  EXPECT_EQ(call({"frobnicate"}).code, kInputError);
  EXPECT_EQ(call({"oracle", kOneFive, "--window", "9:3"}).code, kInputError);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, JsonIsByteStable) {
  const std::vector<std::string> args = {"census", "--trials", "5", "--seed", "9", "--json"};
  const auto a = call(args), b = call(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["violation_count"], 0);
  EXPECT_EQ(call({"trace", kOneFive, "--json"}).out, call({"trace", kOneFive, "--json"}).out);
}

}  // namespace
}  // namespace addbase::cli
