#include "cli.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

using namespace nsym;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "immaculate");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string classify_token(const std::string& alpha, const std::string& beta) {
  const auto r = run({"classify", alpha, beta});
  EXPECT_EQ(r.code, 0) << r.err;
  return r.out.substr(0, r.out.find_first_of(" \n"));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "immaculate_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Expand, Examples) {
  EXPECT_EQ(run({"expand", "6,4,3", "--skew", "2,4,1"}).out, "+1·H[4,2] −1·H[3,1,2]\n");
  EXPECT_EQ(run({"expand", "9,5,5", "--skew", "2,5,6"}).out, "0\n");
  EXPECT_EQ(run({"expand", "3"}).out, "+1·H[3]\n");
  EXPECT_EQ(run({"expand", "2,1"}).out, "−1·H[3] +1·H[2,1]\n");
}

TEST(Expand, ShowMatrixAndPad) {
  EXPECT_EQ(run({"expand", "6,4,3", "--skew", "2,4,1", "--show-matrix"}).out,
            "4 3 7\n1 0 4\n-1 -2 2\n+1·H[4,2] −1·H[3,1,2]\n");
  EXPECT_EQ(run({"expand", "3,3", "--skew", "2", "--pad"}).out,
            run({"expand", "3,3", "--skew", "2,0"}).out);
}

TEST(Expand, ErrorCodes) {
  EXPECT_EQ(run({"expand", "6,x,3"}).code, cli::kParse);
  EXPECT_EQ(run({"expand", "6,0,3"}).code, cli::kParse);
  EXPECT_EQ(run({"expand", "6,4,3", "--skew", "2,4"}).code, cli::kShape);
  const auto r = run({"expand", "6,4,3", "--skew", "2,4"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("length mismatch"), std::string::npos);
  EXPECT_EQ(run({}).code, cli::kParse);
  EXPECT_EQ(run({"bogus"}).code, cli::kParse);
}

TEST(Classify, Examples) {
  EXPECT_EQ(run({"classify", "5,7,1,3", "5,5,5,1"}).out, "ALL_ZERO_PRE_CANCELLATION\n");
  EXPECT_EQ(run({"classify", "10,7,9", "9,8,5"}).out, "PROVABLY_NONZERO 1->1,2->3,3->2\n");
  EXPECT_EQ(run({"classify", "9,5,5", "2,5,6"}).out, "ZERO_AFTER_CANCELLATION\n");
  EXPECT_EQ(run({"classify", "6,4,3", "2,4,1"}).out.rfind("NONZERO_TERM_EXISTS ", 0), 0u);
  EXPECT_EQ(run({"classify", "6,4,3", "2,4"}).code, cli::kShape);
  EXPECT_EQ(run({"classify", "6,4,3"}).code, cli::kParse);
}

TEST(Classify, DimensionCapFromEnvironment) {
  ::setenv("IMMACULATE_DIM_CAP", "2", 1);
  EXPECT_EQ(run({"classify", "9,5,5", "2,5,6"}).out,
            "NONZERO_TERM_EXISTS 1->3,2->2,3->1 (cancellation undecided)\n");
  EXPECT_EQ(run({"expand", "9,5,5", "--skew", "2,5,6"}).code, cli::kShape);
  ::setenv("IMMACULATE_DIM_CAP", "zero", 1);
  EXPECT_EQ(run({"expand", "3"}).code, cli::kParse);
  ::unsetenv("IMMACULATE_DIM_CAP");
}

TEST(SchurCheck, Examples) {
  const auto skew = run({"schur-check", "2,2", "--inner", "1", "--vars", "3"});
  EXPECT_EQ(skew.code, 0);
  EXPECT_EQ(skew.out,
            "MATCH\n+1·x1^2·x2 +1·x1^2·x3 +1·x1·x2^2 +2·x1·x2·x3 +1·x1·x3^2 +1·x2^2·x3 "
            "+1·x2·x3^2\n");
  // Eight tableaux, seven distinct monomials.
  EXPECT_EQ(run({"schur-check", "2,1", "--vars", "3"}).out, skew.out);
  EXPECT_EQ(run({"schur-check", "3", "--vars", "2"}).out,
            "MATCH\n+1·x1^3 +1·x1^2·x2 +1·x1·x2^2 +1·x2^3\n");
}

TEST(SchurCheck, ErrorCodes) {
  EXPECT_EQ(run({"schur-check", "1,2", "--vars", "3"}).code, cli::kParse);
  EXPECT_EQ(run({"schur-check", "2,1", "--inner", "3", "--vars", "3"}).code, cli::kParse);
  EXPECT_EQ(run({"schur-check", "2,1", "--inner", "1,1,1", "--vars", "3"}).code, cli::kParse);
  EXPECT_EQ(run({"schur-check", "2,1"}).code, cli::kParse);
  EXPECT_EQ(run({"schur-check", "2,1", "--vars", "0"}).code, cli::kParse);
}

TEST(Enumerate, PartitionsOnlyMatchesPerPairClassify) {
  const auto r = run({"enumerate", "--n", "4", "--len", "2", "--partitions-only"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, int> counts;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    const std::string alpha = j["alpha"], beta = j["beta"], cls = j["class"];
    EXPECT_TRUE(beta == "2,2" || beta == "3,1") << beta;
    EXPECT_EQ(classify_token(alpha, beta), cls) << alpha << " / " << beta;
    EXPECT_EQ(j["micros"], 0);
    pairs.emplace_back(alpha, beta);
    ++counts[cls];
  }
  // Alpha ranges over 1,3 2,2 3,1; beta over 2,2 3,1; lex order on both.
  const std::vector<std::pair<std::string, std::string>> expected{
      {"1,3", "2,2"}, {"1,3", "3,1"}, {"2,2", "2,2"},
      {"2,2", "3,1"}, {"3,1", "2,2"}, {"3,1", "3,1"}};
  EXPECT_EQ(pairs, expected);
  std::ostringstream summary;
  summary << "total=6";
  for (auto kind : kAllClassKinds) {
    const std::string token(to_token(kind));
    summary << ' ' << token << '=' << counts[token];
  }
  EXPECT_EQ(r.err, summary.str() + "\n");
}

TEST(Enumerate, SingleOneByOnePair) {
  const auto r = run({"enumerate", "--n", "2", "--len", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"alpha\":\"2\",\"beta\":\"2\",\"class\":\"PROVABLY_NONZERO\",\"certificate\":\"1->1\","
            "\"terms\":1,\"micros\":0}\n");
}

TEST(Enumerate, LengthAboveNGivesNoRows) {
  const auto r = run({"enumerate", "--n", "2", "--len", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(r.err,
            "total=0 ALL_ZERO_PRE_CANCELLATION=0 NONZERO_TERM_EXISTS=0 PROVABLY_NONZERO=0 "
            "ZERO_AFTER_CANCELLATION=0\n");
}

TEST(Enumerate, CsvAndFileOutput) {
  const auto path = scratch("n3.csv");
  const auto r = run({"enumerate", "--n", "3", "--len", "2", "--format", "csv", "--out",
                      path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("total=4 ", 0), 0u);
  const std::string csv = slurp(path);
  EXPECT_EQ(csv.rfind("alpha,beta,class,certificate,terms,micros\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_NE(csv.find("\"1,2\",\"1,2\","), std::string::npos);
}

TEST(Enumerate, ThreadCountDoesNotChangeOutput) {
  const auto one = run({"enumerate", "--n", "7", "--len", "3"});
  const auto four = run({"enumerate", "--n", "7", "--len", "3", "--threads", "4"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.err, four.err);
}

TEST(Enumerate, ErrorCodes) {
  EXPECT_EQ(run({"enumerate", "--n", "4", "--len", "2", "--out", "/nonexistent/dir/x.jsonl"}).code,
            cli::kIo);
  EXPECT_EQ(run({"enumerate", "--n", "15", "--len", "2"}).code, cli::kShape);
  EXPECT_EQ(run({"enumerate", "--n", "9", "--len", "8"}).code, cli::kShape);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--len", "2", "--format", "xml"}).code, cli::kParse);
  EXPECT_EQ(run({"enumerate", "--n", "0", "--len", "2"}).code, cli::kParse);
}

TEST(Binary, RunsAsSubprocess) {
  const std::string cmd = std::string(IMMACULATE_CLI_PATH) + " expand 6,4,3 --skew 2,4,1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 256> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  EXPECT_EQ(::pclose(pipe), 0);
  EXPECT_EQ(out, "+1·H[4,2] −1·H[3,1,2]\n");

  const std::string bad = std::string(IMMACULATE_CLI_PATH) + " expand 6,4 --skew 1 2>/dev/null";
  FILE* p2 = ::popen(bad.c_str(), "r");
  ASSERT_NE(p2, nullptr);
  const int status = ::pclose(p2);
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), cli::kShape);
}
