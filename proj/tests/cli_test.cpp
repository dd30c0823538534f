#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = seaweed::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(CliAnalyze, JsonReport) {
  const auto r = run({"analyze", "p 2|3|1|2|2/7|3", "--json"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["index_nilradical"], 7);
  EXPECT_FALSE(j.contains("oracle"));
}

TEST(CliAnalyze, TextReportForTypeA) {
  const auto r = run({"analyze", "pA 3|3|5|2/6|2|1|2|2"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("ind n(s)        = 15"), std::string::npos) << r.out;
}

TEST(CliAnalyze, TypeAFlagOverridesFlavor) {
  const auto r = run({"analyze", "p 3|3|5|2/6|2|1|2|2", "--type-a", "--json"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["index_nilradical"], 15);
}

TEST(CliAnalyze, OracleSection) {
  const auto r = run({"analyze", "p 2|3|1|2|2/7|3", "--json", "--oracle", "--seed", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["oracle"]["index_nilradical_oracle"], 7);
}

TEST(CliAnalyze, SumMismatchExitsTwo) {
  const auto r = run({"analyze", "p 2|3/7"});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("SumMismatch"), std::string::npos);
  EXPECT_EQ(run({"analyze", "p 2|x/7"}).status, 2);
}

TEST(CliAnalyze, BadFieldConfigExitsTwo) {
  EXPECT_EQ(run({"analyze", "p 2/2", "--oracle", "--prime", "15"}).status, 2);
  EXPECT_EQ(run({"analyze", "p 2/2", "--oracle", "--trials", "0"}).status, 2);
}

TEST(CliEnumerate, AllPairsOfSizeThree) {
  const auto r = run({"enumerate", "3"});
  ASSERT_EQ(r.status, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 16u);
  EXPECT_EQ(lines.front()["spec"], "p 1|1|1/1|1|1");
  EXPECT_EQ(lines.back()["spec"], "p 3/3");
}

TEST(CliEnumerate, OracleSectionsAgree) {
  const auto r = run({"enumerate", "4", "--oracle", "--type-a"});
  ASSERT_EQ(r.status, 0) << r.err;
  for (const auto& j : json_lines(r.out)) {
    ASSERT_TRUE(j.contains("oracle"));
    EXPECT_EQ(j["oracle"]["index_nilradical_oracle"], j["index_nilradical"]);
    EXPECT_EQ(j["oracle"]["index_seaweed_oracle"], j["index_seaweed"]);
    EXPECT_EQ(j["oracle"]["center_oracle"], j["center_dim"]);
    EXPECT_EQ(j["oracle"]["breadth_oracle"], j["breadth_seaweed"]);
  }
}

TEST(CliEnumerate, PartsAtMostTwoAreTight) {
  const auto r = run({"enumerate", "10", "--parts-le-2"});
  ASSERT_EQ(r.status, 0);
  const auto lines = json_lines(r.out);
  EXPECT_EQ(lines.size(), 89u * 89u);
  for (const auto& j : lines) ASSERT_EQ(j["index_nilradical"], j["lower_bound"]) << j["spec"];
}

TEST(CliEnumerate, ParabolicFilter) {
  const auto lines = json_lines(run({"enumerate", "5", "--parabolic"}).out);
  EXPECT_EQ(lines.size(), 16u);
  for (const auto& j : lines) EXPECT_TRUE(j["spec"].get<std::string>().ends_with("/5"));
}

TEST(CliEnumerate, ByteIdenticalAcrossRuns) {
  EXPECT_EQ(run({"enumerate", "4", "--oracle", "--seed", "11"}).out,
            run({"enumerate", "4", "--oracle", "--seed", "11"}).out);
}

TEST(CliEnumerate, CapsExitTwo) {
  EXPECT_EQ(run({"enumerate", "13"}).status, 2);
  EXPECT_EQ(run({"enumerate", "7", "--oracle"}).status, 2);
  EXPECT_EQ(run({"enumerate", "0"}).status, 2);
}

TEST(CliVerify, PassesAndIsSeedIndependent) {
  const auto a = run({"verify", "4", "--seed", "42"});
  const auto b = run({"verify", "4", "--seed", "43"});
  EXPECT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all checks passed"), std::string::npos);
  EXPECT_NE(a.out.find("nilradical-index"), std::string::npos);
}

TEST(CliVerify, ZeroIsUsageError) { EXPECT_EQ(run({"verify", "0"}).status, 2); }

TEST(CliRender, MeanderDot) {
  const auto r = run({"render", "p 2|4/1|2|3", "meander", "--dot"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("graph meander", 0), 0u);
  EXPECT_NE(r.out.find("side=bottom"), std::string::npos);
}

TEST(CliRender, WeightedTikzAndHasse) {
  EXPECT_NE(run({"render", "p 2|3|1|2|2/7|3", "weighted", "--tikz"}).out.find("tikzpicture"), std::string::npos);
  const auto h = run({"render", "p 2|3|1|2|2/7|3", "hasse"});
  EXPECT_EQ(h.status, 0);
  EXPECT_NE(h.out.find("digraph hasse"), std::string::npos);
}

TEST(CliRender, UsageErrors) {
  EXPECT_EQ(run({"render", "p 2/2", "spiral"}).status, 2);
  EXPECT_EQ(run({"render", "p 2/3", "meander"}).status, 2);
  EXPECT_EQ(run({"render", "p 2/2", "meander", "--dot", "--tikz"}).status, 2);
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
}

TEST(CliOutput, WritesToFile) {
  const auto path = std::filesystem::temp_directory_path() / "seaweed_cli_test.dot";
  const auto r = run({"render", "p 2/2", "blocks", "--out", path.string()});
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("digraph blocks"), std::string::npos);
  std::filesystem::remove(path);
}
