#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "nmfo/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int s = nmfo::run(args, out, err);
  return {s, out.str(), err.str()};
}

std::string write_model(const std::string& name, const std::string& body) {
  const std::string path = testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

const char* kFinite =
    R"j({"chain": "nm5", "domain": ["a","b"], "predicates": {"P": {"(a)": "1/2", "(b)": "1"}, "q": {"()": "1/2"}}, "constants": {}})j";

}  // namespace

TEST(Cli, Valid) {
  auto r = call({"valid", "--chain", "nm5", "((x0->x1)->x1)->(x0\\/x1)"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.substr(0, 8), "invalid\n");
  r = call({"valid", "--chain", "nm5", "--formula-schema", "sn:2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "valid\n");
  r = call({"valid", "--chain", "nm3", "--formula-schema", "sep:2", "--json"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["counterexample"]["assignment"]["p2"], "1/2");
}

TEST(Cli, EvalOmegaStar) {
  const auto r = call({"eval-omega", "--model", "star-countermodel.json", "--formula-schema", "star"});
  EXPECT_EQ(r.out, "1/2\n");
  EXPECT_EQ(r.status, 1);
  const auto t = call({"eval-omega", "--model", "star-countermodel.json", "forall x. P(x) -> P(x)"});
  EXPECT_EQ(t.out, "1\n");
  EXPECT_EQ(t.status, 0);
}

TEST(Cli, EvalOmegaUnsafe) {
  const std::string path = write_model(
      "unsafe.json",
      R"j({"chain": "nm-prime-inf-minus", "monadic": {"P": {"tail": {"base": "1/2", "coeff": "1/2", "shift": 0}, "exceptions": {}}}, "zeroary": {}})j");
  const auto r = call({"eval-omega", "--model", path, "forall x. P(x)"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.substr(0, 7), "unsafe:");
}

TEST(Cli, Translate) {
  const auto r = call({"translate", "P(x) -> q"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "((P(x)&P(x))->(q&q))&((P(x)&P(x))->(q&q))\n");
}

TEST(Cli, EvalFiniteAndProp) {
  const std::string path = write_model("finite.json", kFinite);
  auto r = call({"eval", "--model", path, "forall x. P(x)"});
  EXPECT_EQ(r.out, "1/2\n");
  EXPECT_EQ(r.status, 1);
  r = call({"eval", "--model", path, "exists x. P(x)"});
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(r.status, 0);
  r = call({"eval", "--model", path, "--assign", "x=b", "P(x)", "--json"});
  EXPECT_EQ(r.out, "{\"value\":\"1\"}\n");
  r = call({"eval", "--chain", "nm4", "--assign", "p1=1", "--assign", "p2=2/3", "--assign", "p3=1/3",
            "--formula-schema", "sep:2"});
  EXPECT_EQ(r.out, "2/3\n");
}

TEST(Cli, Search) {
  auto r = call({"search", "--chain", "nm4", "--formula-schema", "shift:15", "--max-domain", "2"});
  EXPECT_EQ(r.status, 0);
  r = call({"search", "--chain", "nm3", "--formula-schema", "shift:16", "--max-domain", "2"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.substr(0, 12), "countermodel");
  r = call({"search", "--chain", "nm4", "--formula-schema", "shift:15", "--max-domain", "3", "--budget", "10"});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out.substr(0, 15), "budget exceeded");
}

TEST(Cli, ClassifyRotateEmbed) {
  auto r = call({"classify", "--chain", "nm-inf", "--json"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["cup"], true);
  r = call({"rotate", "--chain", "g3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, 4), "nm5\n");
  r = call({"rotate", "--chain", "g3", "--no-fixpoint", "--json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["chain"], "nm4");
  r = call({"embed", "--source", "nm5", "--target", "nm-inf"});
  EXPECT_EQ(r.status, 0);
  r = call({"embed", "--source", "nm5", "--target", "nm-inf-minus"});
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, CutAndCollapse) {
  const std::string path = write_model("finite.json", kFinite);
  auto r = call({"collapse", "--model", path});
  EXPECT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["predicates"]["P"]["(a)"], "0");
  EXPECT_EQ(j["predicates"]["P"]["(b)"], "1");
  const std::string inf = write_model(
      "inf.json", R"j({"chain": "nm-inf", "domain": ["a"], "predicates": {"P": {"(a)": "4/5"}}, "constants": {}})j");
  r = call({"cut", "--model", inf, "--alpha", "3/4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["predicates"]["P"]["(a)"], "1");
  r = call({"cut", "--model", path, "--alpha", "3/4"});
  EXPECT_EQ(r.status, 2);
}

TEST(Cli, Verify) {
  auto r = call({"verify", "sn-bp"});
  EXPECT_EQ(r.status, 0);
  r = call({"verify", "sn-bp", "--json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "sn-bp");
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["claims"].size(), 32u);
  const auto a = call({"verify", "cut", "--json", "--seed", "5", "--samples", "10"});
  const auto b = call({"verify", "cut", "--json", "--seed", "5", "--samples", "10"});
  EXPECT_EQ(a.out, b.out);
  r = call({"verify", "shifting", "--samples", "5"});
  EXPECT_EQ(r.status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).status, 2);
  EXPECT_EQ(call({"frobnicate"}).status, 2);
  EXPECT_EQ(call({"valid", "p"}).status, 2);
  EXPECT_EQ(call({"valid", "--chain", "nm3"}).status, 2);
  EXPECT_EQ(call({"valid", "--chain", "nm3", "p &"}).status, 2);
  EXPECT_EQ(call({"valid", "--chain", "zz", "p"}).status, 2);
  EXPECT_EQ(call({"eval-omega", "--model", "/nonexistent.json", "p"}).status, 2);
  EXPECT_EQ(call({"verify", "nope"}).status, 2);
  const auto r = call({"valid", "--chain", "nm3", "p &"});
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}
