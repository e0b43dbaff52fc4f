#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "borromean/cli.hpp"

using borromean::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, HomcountTrivialBlock) {
  const auto r = invoke({"homcount", "--expr", "eps3", "--sym", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("43"), std::string::npos);
}

TEST(Cli, AchiralRay) {
  const auto r = invoke({"achiral", "--s", "per: A As"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("achiral: true"), std::string::npos);
  const auto c = invoke({"achiral", "--s", "per: A"});
  EXPECT_NE(c.out.find("achiral: false"), std::string::npos);
}

TEST(Cli, UnknownBlockIsUserError) {
  const auto r = invoke({"homcount", "--expr", "Zz", "--sym", "3"});
  EXPECT_EQ(r.code, 1);
  for (const char* name : {"A", "Ab", "As", "Abs", "eps3", "dirac"}) {
    EXPECT_NE(r.err.find(name), std::string::npos) << name;
  }
}

TEST(Cli, SyntaxErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"frobnicate"}).code, 1);
  EXPECT_EQ(invoke({"homcount", "--expr", "A"}).code, 1);
  EXPECT_EQ(invoke({"homcount", "--expr", "A", "--sym", "9"}).code, 1);
  EXPECT_EQ(invoke({"homcount", "--expr", "A", "--sym", "3", "--method", "guess"}).code, 1);
  EXPECT_EQ(invoke({"classify", "--s1", "per: A"}).code, 1);
  EXPECT_EQ(invoke({"achiral", "--s", "per: Q"}).code, 1);
  EXPECT_EQ(invoke({"present", "--file", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(invoke({"present", "--expr", "A eps2"}).code, 1);
}

TEST(Cli, HelpIsSuccess) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("homcount"), std::string::npos);
}

TEST(Cli, DeepGate) {
  const auto r = invoke({"homcount", "--expr", "A", "--sym", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--deep"), std::string::npos);
}

TEST(Cli, BudgetExit) {
  EXPECT_EQ(invoke({"--budget", "100", "homcount", "--expr", "A", "--sym", "5"}).code, 2);
  EXPECT_EQ(invoke({"homcount", "--expr", "A", "--sym", "5", "--budget", "100"}).code, 2);
}

TEST(Cli, JsonLines) {
  const auto r = invoke({"--json", "homcount", "--expr", "A As", "--sym", "4", "--method", "both"});
  EXPECT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  for (const auto& j : lines) {
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["classes"], 63);
    EXPECT_EQ(j["total"], lines[0]["total"]);
  }
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "classify", "--s1", "per: A", "--s2", "per: Ab"},
           {"--json", "achiral", "--s", "per: A Ab"},
           {"--json", "groupoid"},
           {"--json", "present", "--expr", "A", "--simplify"},
           {"--json", "homcount", "--table", "single", "--sym", "4"}}) {
    const auto out = invoke(args);
    EXPECT_EQ(out.code, 0);
    EXPECT_NO_THROW(json_lines(out.out)) << args[1];
  }
}

TEST(Cli, OutputIndependentOfThreads) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"homcount", "--table", "pairs", "--sym", "4", "--method", "both"},
           {"--json", "homcount", "--expr", "A Abs dirac", "--sym", "4"}}) {
    auto one = args;
    one.insert(one.begin(), {"--threads", "1"});
    auto many = args;
    many.insert(many.begin(), {"--threads", "5"});
    EXPECT_EQ(invoke(one).out, invoke(many).out);
  }
}

TEST(Cli, WholeTables) {
  const auto r = invoke({"homcount", "--table", "single"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Sym(4)  | 43      | 47      |"), std::string::npos);
  EXPECT_NE(r.out.find("Sym(5)  | 161     | 193     |"), std::string::npos);
}

TEST(Cli, Groupoid) {
  const auto list = invoke({"groupoid", "--emit", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_EQ(std::count(list.out.begin(), list.out.end(), '\n'), 96);
  const auto table = invoke({"groupoid"});
  EXPECT_NE(table.out.find("realized: 96  excluded: 288"), std::string::npos);
  const auto j = json_lines(invoke({"--json", "groupoid"}).out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["cells"].size(), 64u);
}

TEST(Cli, Classify) {
  const auto r = invoke({"classify", "--s1", "per: A As", "--s2", "pre: Abs ; per: As A"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("equivalent: true"), std::string::npos);
  const auto j = json_lines(invoke({"--json", "classify", "--s1", "per: A", "--s2", "per: Ab"}).out);
  EXPECT_EQ(j[0]["cond3"]["holds"], true);
  EXPECT_EQ(j[0]["op_equivalent"], false);
}

TEST(Cli, PresentFromFile) {
  const auto file = invoke({"present", "--file", std::string(DIAGRAM_DIR) + "/block_a.json"});
  const auto expr = invoke({"present", "--expr", "A"});
  EXPECT_EQ(file.code, 0);
  EXPECT_EQ(file.out, expr.out);
  EXPECT_EQ(expr.out.rfind("gens: ", 0), 0u);
}
