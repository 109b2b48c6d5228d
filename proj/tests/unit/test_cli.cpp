#include "ctq/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <sys/wait.h>

using namespace ctq;
using nlohmann::json;

namespace {

RunResult cli(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  return run_command_line(args, in);
}

json parsed(const RunResult &r) {
  EXPECT_EQ(r.status, 0) << r.error;
  return json::parse(r.output);
}

const char *example_matrix = "1 2 0 1\n0 0 2 1\n3 0 1 1\n";

} // namespace

TEST(Cli, Hilbert) {
  for (const char *method : {"kostka", "zigzag", "linear"}) {
    auto j = parsed(cli({"hilbert", "--alpha", "3,2", "--beta", "2,2,1",
                         "--method", method}));
    EXPECT_EQ(j["coeffs"], json::parse(R"(["1","2","2"])")) << method;
  }
  auto r = cli({"hilbert", "--alpha", "3,2", "--beta", "2,2,1", "--csv"});
  EXPECT_EQ(r.output, "degree,coefficient\n0,1\n1,2\n2,2\n");
}

TEST(Cli, RskFromStdin) {
  auto j = parsed(cli({"rsk", "--matrix", "-"}, example_matrix));
  EXPECT_EQ(j["P"], json::parse("[[1,1,1,1,2,2,3],[2,3,3,3],[3]]"));
  EXPECT_EQ(j["Q"], json::parse("[[1,1,1,1,3,3,4],[2,2,3,4],[4]]"));
  EXPECT_EQ(j["shape"], json::parse("[7,4,1]"));
  EXPECT_EQ(j["zigzag"], 7);
  EXPECT_EQ(j["steps"].size(), 3u);
}

TEST(Cli, RskFromFile) {
  auto path = std::filesystem::temp_directory_path() / "ctq_cli_matrix.txt";
  {
    std::FILE *f = std::fopen(path.c_str(), "w");
    ASSERT_NE(f, nullptr);
    std::fputs(example_matrix, f);
    std::fclose(f);
  }
  auto a = cli({"rsk", "--matrix", path.string()});
  auto b = cli({"rsk", "--matrix", "-"}, example_matrix);
  EXPECT_EQ(a.output, b.output);
  std::filesystem::remove(path);
  EXPECT_EQ(cli({"rsk", "--matrix", "/nonexistent/m.txt"}).status, 2);
}

TEST(Cli, Zigzag) {
  auto j = parsed(cli({"zigzag", "--matrix", "-"}, example_matrix));
  EXPECT_EQ(j["zigzag"], 7);
  long w = 0;
  const int a[3][4] = {{1, 2, 0, 1}, {0, 0, 2, 1}, {3, 0, 1, 1}};
  for (const auto &c : j["witness"])
    w += a[c[0].get<int>() - 1][c[1].get<int>() - 1];
  EXPECT_EQ(w, 7);
}

TEST(Cli, StandardBasisAndVerify) {
  auto j = parsed(cli({"standard-basis", "--alpha", "3,2", "--beta", "2,2,1"}));
  EXPECT_TRUE(j["matches_mb"].get<bool>());
  EXPECT_EQ(j["monomials"].size(), 5u);
  auto c = parsed(cli({"standard-basis", "--alpha", "3,2", "--beta", "2,2,1",
                       "--tie", "column"}));
  EXPECT_TRUE(c["matches_mb"].get<bool>());
  auto v = parsed(cli({"verify", "--alpha", "2,1,1", "--beta", "3,1"}));
  EXPECT_TRUE(v["passed"].get<bool>());
}

TEST(Cli, Frobenius) {
  auto j = parsed(cli({"frobenius", "--mu", "3,2", "--nu", "2,2,1"}));
  ASSERT_EQ(j["degrees"].size(), 3u);
  EXPECT_EQ(j["degrees"][1]["dimension"], "2");
  EXPECT_EQ(cli({"frobenius", "--mu", "2,3", "--nu", "2,2,1"}).status, 2);
}

TEST(Cli, ConjecturesAndLefschetz) {
  auto j = parsed(cli({"conjectures", "--alpha", "3,2", "--beta", "2,2,1"}));
  EXPECT_EQ(j["violations"], 0);
  auto l = parsed(cli({"lefschetz", "--alpha", "3,2", "--beta", "2,2,1"}));
  EXPECT_TRUE(l["violations"].empty());
  EXPECT_EQ(l["entries"].size(), 2u);
  EXPECT_EQ(l["min_zigzag"], 3);
}

TEST(Cli, Ehrhart) {
  auto j = parsed(cli({"ehrhart", "--alpha", "3,2", "--beta", "2,2,1",
                       "--order", "2"}));
  ASSERT_EQ(j["series"].size(), 3u);
  EXPECT_EQ(j["series"][0]["at_one"], "1");
  EXPECT_EQ(j["series"][1]["coeffs"], json::parse(R"(["1","2","2"])"));
  auto csv = cli({"ehrhart", "--alpha", "1,1", "--beta", "1,1", "--order",
                  "1", "--csv"});
  EXPECT_EQ(csv.status, 0);
  EXPECT_EQ(csv.output.rfind("m,degree,coefficient\n", 0), 0u);
}

TEST(Cli, EqualPartFamilies) {
  auto j = parsed(cli({"figure1", "--family", "2"}));
  EXPECT_EQ(j["coeffs"], json::parse(R"(["1","841","354061","99222341"])"));
  EXPECT_EQ(j["alpha"], "2^30");
  EXPECT_EQ(cli({"figure1", "--family", "7"}).status, 2);
}

TEST(Cli, UsageErrors) {
  auto bad = cli({"hilbert", "--alpha", "3,x", "--beta", "2,2,1"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.error.find("--alpha"), std::string::npos) << bad.error;
  auto beta = cli({"hilbert", "--alpha", "3,2", "--beta", "-1"});
  EXPECT_EQ(beta.status, 2);
  EXPECT_EQ(cli({"hilbert", "--alpha", "3,2", "--beta", "2,2"}).status, 2);
  EXPECT_EQ(cli({"hilbert", "--alpha", "3,2"}).status, 2);
  EXPECT_EQ(cli({}).status, 2);
  EXPECT_EQ(cli({"nonsense"}).status, 2);
  EXPECT_EQ(cli({"rsk", "--matrix", "-"}, "1 2\n3\n").status, 2);
  EXPECT_EQ(cli({"hilbert", "--alpha", "1", "--beta", "1", "--method", "x"}).status, 2);
}

TEST(Cli, Deterministic) {
  auto a = cli({"frobenius", "--mu", "2,1,1", "--nu", "2,2"});
  auto b = cli({"frobenius", "--mu", "2,1,1", "--nu", "2,2"});
  EXPECT_EQ(a.output, b.output);
  auto s1 = cli({"sweep", "--max-n", "3", "--max-len", "2", "--threads", "1"});
  auto s3 = cli({"sweep", "--max-n", "3", "--max-len", "2", "--threads", "3"});
  EXPECT_EQ(s1.status, 0);
  EXPECT_EQ(s1.output, s3.output);
}

TEST(Cli, SweepBounds) {
  SweepOptions zero;
  zero.max_n = 0;
  auto j = sweep(zero);
  EXPECT_TRUE(j["passed"].get<bool>());
  SweepOptions small;
  small.max_n = 4;
  small.max_len = 2;
  auto s = sweep(small);
  EXPECT_TRUE(s["passed"].get<bool>());
  EXPECT_EQ(s["violations"], 0);
}

TEST(Cli, KostkaCacheRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "ctq_cli_cache";
  std::filesystem::remove_all(dir);
  ::setenv("CTQ_CACHE_DIR", dir.c_str(), 1);
  auto first = cli({"hilbert", "--alpha", "2,2,1", "--beta", "3,1,1"});
  EXPECT_TRUE(std::filesystem::exists(dir / "kostka-memo.json"));
  auto second = cli({"hilbert", "--alpha", "2,2,1", "--beta", "3,1,1"});
  EXPECT_EQ(first.output, second.output);
  // A corrupt cache is ignored, not fatal.
  {
    std::FILE *f = std::fopen((dir / "kostka-memo.json").c_str(), "w");
    std::fputs("{not json", f);
    std::fclose(f);
  }
  auto third = cli({"hilbert", "--alpha", "2,2,1", "--beta", "3,1,1"});
  EXPECT_EQ(third.status, 0);
  EXPECT_EQ(third.output, first.output);
  ::unsetenv("CTQ_CACHE_DIR");
  std::filesystem::remove_all(dir);
}

TEST(Cli, ToolBinary) {
  std::string cmd = std::string(CTQ_TOOL_PATH) +
                    " hilbert --alpha 3,2 --beta 2,2,1 > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  std::string bad = std::string(CTQ_TOOL_PATH) + " hilbert --alpha 3 2>/dev/null";
  int st = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(st), 2);
}
