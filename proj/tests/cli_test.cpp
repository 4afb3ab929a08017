#include "gsv/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsv/report.hpp"
#include "gsv/rule.hpp"

namespace gsv {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(const std::vector<std::string>& args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

TEST(Cli, Census) {
  const auto j = run_json({"census", "--agents", "2", "--alts", "3", "--format", "json"});
  EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
  EXPECT_EQ(j["strategy_proof"], 2);
  EXPECT_EQ(j["dictatorial"], 2);
  EXPECT_EQ(j["total"], 19683);
  EXPECT_FALSE(j.contains("elapsed_seconds"));
  EXPECT_TRUE(run_json({"census", "--timing"}).contains("elapsed_seconds"));
}

TEST(Cli, Classify) {
  const auto j = run_json({"classify", "--rule", "DICT:0", "--agents", "2", "--alts", "3"});
  EXPECT_EQ(j["m_count"], 0);
  EXPECT_EQ(j["d_count"], 36);
  const auto slow = run_json({"classify", "--rule", "DICT:0", "--path", "definitional", "--sets"});
  EXPECT_EQ(slow["d_count"], 36);
  EXPECT_EQ(slow["d_set_hex"], "fffffffff");
  const auto borda = run_json({"classify", "--rule", "BORDALEX"});
  EXPECT_TRUE(borda["m_count"].is_null());
  EXPECT_TRUE(borda.contains("warning"));
  const auto constant = run_json({"classify", "--rule", "CONST:a"});
  EXPECT_EQ(constant["d_count"], 36);
  EXPECT_TRUE(constant.contains("warning"));
}

TEST(Cli, LemmaSuite) {
  const auto r = run({"lemmas", "--suite", "all", "--agents", "2", "--alts", "3", "--format", "text"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> ids;
  for (std::string line; std::getline(lines, line);) {
    EXPECT_NE(line.find(" pass "), std::string::npos) << line;
    ids.push_back(line.substr(0, line.find(' ')));
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"L1", "L3", "L4", "L5", "C1", "C2", "R1", "R2", "THM"}));
}

TEST(Cli, TheoremFailsOnTwoAlternatives) {
  const auto r = run({"lemmas", "THM", "--alts", "2", "--agents", "3"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["counterexample"]["rule"], "MAJLEX");
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"classify"},
           {"classify", "--rule", "TOPS:n=2,m=3:0001112x2"},
           {"classify", "--rule", "DICT:7"},
           {"classify", "--rule", "TOPS:n=2,m=2:0001"},
           {"census", "--agents", "3"},
           {"census", "--filter", "fair"},
           {"census", "--format", "yaml"},
           {"census", "--mode", "random"},
           {"lemmas", "L9"},
           {"lemmas"},
           {"census", "--alts", "1"},
           {"census", "--agents", "1"},
           {"census", "--alts", "11"},
           {"inspect", "--rule", "MAJLEX"},
       }) {
    const auto r = run(args);
    EXPECT_EQ(r.code, kExitUsage) << ::testing::PrintToString(args) << " " << r.out;
    EXPECT_FALSE(r.err.empty());
  }
  const auto r = run({"classify", "--rule", "TOPS:n=2,m=3:0001112x2"});
  EXPECT_NE(r.err.find("position 20"), std::string::npos) << r.err;
}

TEST(Cli, ByteDeterminism) {
  const std::vector<std::vector<std::string>> commands{
      {"census", "--agents", "3", "--mode", "sampled", "--seed", "5", "--samples", "3000"},
      {"census", "--alts", "2", "--format", "csv"},
      {"lemmas", "--suite", "all", "--agents", "3", "--mode", "sampled", "--seed", "9", "--samples", "200"},
      {"classify", "--rule", "TOPS:n=2,m=3:002012012", "--sets"},
      {"inspect", "--rule", "BORDALEX"},
      {"counterexample", "--agents", "3"},
  };
  for (const auto& args : commands) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, WorkerCountDoesNotChangeOutputOtherThanTheConfig) {
  auto one = run_json({"census", "--agents", "3", "--mode", "sampled", "--seed", "5", "--samples",
                       "3000", "--workers", "1"});
  auto four = run_json({"census", "--agents", "3", "--mode", "sampled", "--seed", "5", "--samples",
                        "3000", "--workers", "4"});
  one["config"].erase("workers");
  four["config"].erase("workers");
  EXPECT_EQ(one.dump(), four.dump());
}

TEST(Cli, PrintedRulesParseBack) {
  const auto census = run_json({"census", "--filter", "unanimous", "--filter", "efficient"});
  for (const auto& name : census["strategy_proof_rules"]) {
    const auto text = name.get<std::string>();
    EXPECT_EQ(Rule::parse(text).to_string(), text);
  }
  const auto csv = run({"census", "--filter", "unanimous", "--format", "csv"});
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto text = line.substr(1, line.find('"', 1) - 1);
    EXPECT_EQ(Rule::parse(text).to_string(), text);
    ++rows;
  }
  EXPECT_EQ(rows, 729);
  for (const std::string text : {"BORDALEX", "DICT:1", "CONST:c", "TOPS:n=2,m=3:012012012"}) {
    const auto j = run_json({"inspect", "--rule", text});
    EXPECT_EQ(j["rule"], text);
  }
  const auto fail = Json::parse(run({"lemmas", "L4", "--alts", "2"}).out);
  const auto text = fail["counterexample"]["rule"].get<std::string>();
  EXPECT_EQ(Rule::parse(text, Dimensions{2, 2}).to_string(), text);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "gsv_cli_test_report.json";
  const auto r = run({"classify", "--rule", "DICT:1", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  EXPECT_EQ(Json::parse(buffer.str())["d_count"], 36);
  std::filesystem::remove(path);
}

TEST(Cli, ExecutableExitCodes) {
  const std::string cli = GSV_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("classify --rule DICT:0"), 0);
  EXPECT_EQ(status("lemmas THM --alts 2"), 1);
  EXPECT_EQ(status("classify --rule 'TOPS:n=2,m=3:12'"), 2);
  EXPECT_EQ(status("--help"), 0);
}

}  // namespace
}  // namespace gsv
