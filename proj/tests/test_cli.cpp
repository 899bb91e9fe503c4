#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace hopfpi::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, VerifyTaftIdentity) {
  const auto r = run_cli({"verify", "--object", "taft:3;a=sym;c=sym", "taft_pc"});
  EXPECT_EQ(r.code, kVerified);
  EXPECT_TRUE(contains(r.out, "identity verified (symbolic a, c)")) << r.out;
}

TEST(Cli, VerifyFailingExpression) {
  const auto r = run_cli({"verify", "--object", "taft:2;a=1;c=1", "X*Y - Y*X"});
  EXPECT_EQ(r.code, kFalsified);
  EXPECT_TRUE(contains(r.out, "t[1,")) << r.out;
}

TEST(Cli, DistinguishTaft) {
  const auto r = run_cli({"distinguish", "taft:2;a=1;c=0", "taft:2;a=1;c=1"});
  EXPECT_EQ(r.code, kFalsified);
  EXPECT_TRUE(contains(r.out, "taft_pc")) << r.out;
  EXPECT_TRUE(contains(r.out, "-4*t[1,1]^2*t[1,x]^2")) << r.out;
}

TEST(Cli, DistinguishEqualObjects) {
  const auto r = run_cli({"distinguish", "taft:3;a=1;c=5", "taft:3;a=1;c=5"});
  EXPECT_EQ(r.code, kVerified);
}

TEST(Cli, DistinguishSymbolicObjectsGetPrimes) {
  const auto r = run_cli({"distinguish", "taft:3;a=1;c=sym", "taft:3;a=1;c=sym"});
  EXPECT_EQ(r.code, kFalsified);
  EXPECT_TRUE(contains(r.out, "c'")) << r.out;
}

TEST(Cli, SelfcheckEn2) {
  const auto r = run_cli({"selfcheck", "en:2"});
  EXPECT_EQ(r.code, kVerified) << r.out;
  EXPECT_FALSE(contains(r.out, "[FAIL]"));
}

TEST(Cli, SelfcheckSeedIsReproducible) {
  const auto a = run_cli({"--seed", "5", "selfcheck", "taft:3"});
  const auto b = run_cli({"--seed", "5", "selfcheck", "taft:3"});
  EXPECT_EQ(a.code, kVerified) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, NormalFormCoproductMu) {
  EXPECT_EQ(run_cli({"normal-form", "taft:3", "y*x"}).out, "z*x*y\n");
  EXPECT_EQ(run_cli({"coproduct", "taft:2", "y"}).out, "1 @ y + y @ x\n");
  EXPECT_EQ(run_cli({"mu", "taft:2", "taft:2;", "Y*X+X*Y"}).out, "2*a*t[1,x]*t[1,y]\n");
  EXPECT_EQ(run_cli({"mu", "taft:2", "taft:2;", "taft_pc"}).out, "0\n");
}

TEST(Cli, MatrixIdentities) {
  EXPECT_EQ(run_cli({"verify", "--object", "matrix:2", "standard:4"}).code, kVerified);
  EXPECT_EQ(run_cli({"verify", "--object", "matrix:2", "standard:3"}).code, kFalsified);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, kUsage);
  EXPECT_EQ(run_cli({"bogus"}).code, kUsage);
  const auto parse = run_cli({"normal-form", "taft:3", "x^"});
  EXPECT_EQ(parse.code, kUsage);
  EXPECT_TRUE(contains(parse.err, "position 2")) << parse.err;
  EXPECT_EQ(run_cli({"verify", "--object", "taft:3;a=0", "taft_pc"}).code, kUsage);
  EXPECT_EQ(run_cli({"distinguish", "taft:2;", "en:1;"}).code, kUsage);
  EXPECT_EQ(run_cli({"--max-degree", "4", "normal-form", "taft:3", "(x*y)^3"}).code, kUsage);
}

TEST(Cli, JsonSchema) {
  const auto r = run_cli({"--format", "json", "distinguish", "taft:2;a=1;c=0", "taft:2;a=1;c=1"});
  EXPECT_EQ(r.code, kFalsified);
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_EQ(json["command"], "distinguish");
  EXPECT_TRUE(json.contains("input"));
  EXPECT_EQ(json["result"]["isomorphic"], false);
  EXPECT_EQ(json["witness"]["image"], "-4*t[1,1]^2*t[1,x]^2");
  EXPECT_TRUE(json["timings"].is_null());

  const auto timed = nlohmann::json::parse(
      run_cli({"--format", "json", "--timings", "normal-form", "taft:2", "x"}).out);
  EXPECT_TRUE(timed["timings"].is_object());
}

TEST(Cli, JsonIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "catalog", "en:3"},
        std::vector<std::string>{"--format", "json", "selfcheck", "taft:2"},
        std::vector<std::string>{"--format", "json", "mu", "en:2", "en:2;", "en_dij:1,2"},
        std::vector<std::string>{"--format", "json", "distinguish", "en:2;a=1;c1=0;c2=0;d12=0",
                                 "en:2;a=1;c1=0;c2=0;d12=1"}}) {
    const auto first = run_cli(args), second = run_cli(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_TRUE(nlohmann::json::accept(first.out));
  }
}

TEST(Cli, JsonErrors) {
  const auto r = run_cli({"--format", "json", "normal-form", "taft:3", "x +"});
  EXPECT_EQ(r.code, kUsage);
  const auto json = nlohmann::json::parse(r.out);
  EXPECT_TRUE(json.contains("error"));
}

}  // namespace
}  // namespace hopfpi::cli
