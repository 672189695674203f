#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cantordim_cli/cli.hpp"

using namespace cantordim;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::vector<const char*> argv{"cantordim"};
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MeasureFullCube) {
  auto r = run({"measure", "--set", R"({"kind":"full"})", "--depth", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["lower"], "1");
  EXPECT_EQ(j["upper"], "1");
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args{"dim", "--set", R"({"kind":"ci","I":"evens"})", "--depth", "20"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, CsvFormat) {
  auto r = run({"dim", "--set", R"({"kind":"ci","I":"evens"})", "--depth", "4", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  EXPECT_NE(header.find(','), std::string::npos);
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  EXPECT_GE(lines, 4u);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"measure", "--set", "{\"kind\":"}).code, cli::kInputError);
  auto r = run({"measure", "--set", "{\"kind\":\"ful"});
  EXPECT_NE(r.err.find("parse error at byte"), std::string::npos);
  EXPECT_EQ(run({"measure", "--set", R"({"kind":"nonsense"})"}).code, cli::kInputError);
  EXPECT_EQ(run({"verify", "no-such-instance"}).code, cli::kInputError);
  EXPECT_EQ(run({"measure", "--set", "/nonexistent/file.json"}).code, cli::kInputError);
}

TEST(Cli, ResourceLimit) {
  auto r = run({"--budget", "1", "measure", "--set", R"({"kind":"ci","I":"evens"})", "--depth", "30"});
  EXPECT_EQ(r.code, cli::kResourceLimit);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("CANTORDIM_BUDGET", "1", 1);
  auto r = run({"measure", "--set", R"({"kind":"ci","I":"evens"})", "--depth", "30"});
  auto flag = run({"--budget", "100000000", "measure", "--set", R"({"kind":"ci","I":"evens"})", "--depth", "30"});
  ::unsetenv("CANTORDIM_BUDGET");
  EXPECT_EQ(r.code, cli::kResourceLimit);
  EXPECT_EQ(flag.code, 0);
}

TEST(Cli, VerifyInstances) {
  EXPECT_EQ(run({"verify", "EC3", "--depth", "16"}).code, 0);
  EXPECT_EQ(run({"verify", "chain", "--set", R"({"kind":"ci","I":"evens"})", "--depth", "10"}).code, 0);
  auto r = run({"verify", "lambda", "--set", R"({"kind":"full"})", "--input", R"([{"cyl":"0"},{"cyl":"1"}])",
                "--groups", "1"});
  EXPECT_EQ(r.code, cli::kVerificationFailed) << r.out << r.err;
}

TEST(Cli, WitnessMeF) {
  auto r = run({"witness", "me-f", "--gauge", "r^1", "--blocks", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  std::vector<std::size_t> f;
  for (auto& v : j["f"]) f.push_back(v.get<std::size_t>());
  for (auto& row : j["rows"]) EXPECT_TRUE(row["passed"].get<bool>());
  EXPECT_EQ(f, (std::vector<std::size_t>{0, 1, 2, 4, 7, 11, 16}));
}

TEST(Cli, CoverExtract) {
  auto r = run({"cover", "extract", "--set", R"({"kind":"ci","I":"evens"})", "--scale", "2", "--depth", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["rows"].empty());
}
