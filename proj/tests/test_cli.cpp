#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "brc_cli.hpp"

namespace brc {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "brc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("brc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, KeygenWritesKeyAndPrintsElement) {
  auto r = run({"keygen", "--indices", "2,3", "--out", path("k")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cli::read_file(path("k")), "BRC-KEY v1\nS 2 3\n");
  EXPECT_EQ(r.out, "D1 2\nD2 -1\nD3 -1\nO2 1\n");

  r = run({"keygen", "--indices", "5", "--out", path("k5")});
  EXPECT_EQ(r.out, "D5 -1\nO2 1\n");
}

TEST_F(CliTest, KeygenRejectsBadIndices) {
  auto r = run({"keygen", "--indices", "2,2", "--out", path("k")});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("duplicate"), std::string::npos);
  EXPECT_NE(run({"keygen", "--indices", "0", "--out", path("k")}).code, 0);
  EXPECT_NE(run({"keygen", "--indices", "x", "--out", path("k")}).code, 0);
}

TEST_F(CliTest, EncryptHiFrozenCiphertext) {
  run({"keygen", "--indices", "2", "--out", path("k")});
  cli::write_file(path("m"), "Hi");
  auto r = run({"encrypt", "--key", path("k"), "--in", path("m"), "--out", path("c")});
  ASSERT_EQ(r.code, 0) << r.err;
  // (72 D1 + 105 D2)(O2 - D2) = 72 D1 + 105 D2 - 144 D1 - 210 D2.
  EXPECT_EQ(cli::read_file(path("c")), "BRC-CT v1\nL 2\nD1 -72\nD2 -105\n");
  r = run({"decrypt", "--key", path("k"), "--in", path("c"), "--out", path("d")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(cli::read_file(path("d")), "Hi");
}

TEST_F(CliTest, RoundtripRandomText) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> byte(0, 127), len(1, 200);
  run({"keygen", "--indices", "3,4,10,12", "--out", path("k")});
  for (int iter = 0; iter < 20; ++iter) {
    std::string text;
    for (int i = len(rng); i > 0; --i) text.push_back(static_cast<char>(byte(rng)));
    cli::write_file(path("m"), text);
    ASSERT_EQ(run({"encrypt", "--key", path("k"), "--in", path("m"), "--out", path("c")}).code, 0);
    ASSERT_EQ(run({"decrypt", "--key", path("k"), "--in", path("c"), "--out", path("d")}).code, 0);
    EXPECT_EQ(cli::read_file(path("d")), text);
  }
}

TEST_F(CliTest, EncryptErrors) {
  run({"keygen", "--indices", "2", "--out", path("k")});
  cli::write_file(path("empty"), "");
  auto r = run({"encrypt", "--key", path("k"), "--in", path("empty"), "--out", path("c")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("empty"), std::string::npos);

  cli::write_file(path("utf8"), "caf\xC3\xA9");
  r = run({"encrypt", "--key", path("k"), "--in", path("utf8"), "--out", path("c")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position 3"), std::string::npos);

  cli::write_file(path("badkey"), "BRC-KEY v1\nS 3 2\n");
  cli::write_file(path("m"), "x");
  EXPECT_EQ(run({"encrypt", "--key", path("badkey"), "--in", path("m"), "--out", path("c")}).code, 2);
  EXPECT_NE(run({"encrypt", "--key", path("missing"), "--in", path("m"), "--out", path("c")}).code, 0);
}

TEST_F(CliTest, DecryptErrors) {
  run({"keygen", "--indices", "2", "--out", path("k")});
  cli::write_file(path("trunc"), "BRC-CT v1\nL 2\n");
  EXPECT_EQ(run({"decrypt", "--key", path("k"), "--in", path("trunc"), "--out", path("d")}).code, 2);

  // Wrong key: the recovered coefficients are not character codes.
  cli::write_file(path("m"), "Hello");
  run({"keygen", "--indices", "1,2,3", "--out", path("k2")});
  ASSERT_EQ(run({"encrypt", "--key", path("k2"), "--in", path("m"), "--out", path("c")}).code, 0);
  auto r = run({"decrypt", "--key", path("k"), "--in", path("c"), "--out", path("d")});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("wrong key"), std::string::npos);
}

TEST_F(CliTest, AttackCpa) {
  auto r = run({"attack", "cpa", "--s0", "2", "--s1", "3", "--hidden-bit", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("probe: D3\n"), std::string::npos);
  EXPECT_NE(r.out.find("response: -D3\n"), std::string::npos);
  EXPECT_NE(r.out.find("guess: 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("queries: 1\n"), std::string::npos);

  r = run({"attack", "cpa", "--s0", "2", "--s1", "2", "--hidden-bit", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("identical"), std::string::npos);

  EXPECT_EQ(run({"attack", "cpa", "--s0", "2", "--s1", "3"}).code, 2);
  EXPECT_NE(run({"attack", "cpa", "--s0", "2", "--s1", "3", "--hidden-bit", "2"}).code, 0);
}

TEST_F(CliTest, AttackCpaRandomAndTrivial) {
  auto r = run({"attack", "cpa", "--random", "--seed", "123"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("seed: 123\n"), std::string::npos);
  EXPECT_NE(r.out.find("hidden bit: "), std::string::npos);
  EXPECT_EQ(run({"attack", "cpa", "--random", "--seed", "123"}).out, r.out);

  r = run({"attack", "cpa", "--s0", "2,5", "--s1", "2,7", "--hidden-bit", "0", "--trivial"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("query: O2\n"), std::string::npos);
}

TEST_F(CliTest, AttackAmbiguity) {
  auto r = run({"attack", "ambiguity", "--s", "2,3", "--window", "5", "--count", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ambiguous key: {14,21} matrix equal"), std::string::npos);
  EXPECT_NE(r.out.find("ambiguous key: {22,33} matrix equal"), std::string::npos);
  EXPECT_NE(r.out.find("ambiguous key: {26,39} matrix equal"), std::string::npos);
  EXPECT_NE(r.out.find("matrices: identical\n"), std::string::npos);
  EXPECT_EQ(run({"attack", "ambiguity", "--s", "2,3", "--window", "5", "--count", "0"}).code, 2);
}

TEST_F(CliTest, AttackKpa) {
  run({"keygen", "--indices", "2,3,7", "--out", path("k")});
  auto r = run({"attack", "kpa", "--key", path("k"), "--pairs", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rank: 8\n"), std::string::npos);
  EXPECT_NE(r.out.find("matches true operator: yes"), std::string::npos);
  EXPECT_NE(r.out.find("also consistent with: {22,33,77}"), std::string::npos);

  r = run({"attack", "kpa", "--key", path("k"), "--pairs", "3", "--window", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("operator: underdetermined"), std::string::npos);

  r = run({"attack", "kpa", "--key", path("k"), "--pairs", "12", "--window", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rank: 6\n"), std::string::npos);
}

TEST_F(CliTest, Verify) {
  for (const char* suite : {"table", "recurrence", "rf1"}) {
    auto r = run({"verify", suite});
    EXPECT_EQ(r.code, 0) << suite << r.out;
    EXPECT_NE(r.out.find(": pass"), std::string::npos);
  }
  auto r = run({"verify", "all", "--involution-samples", "50", "--coeff-samples", "20"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run({"verify", "nonsense"}).code, 2);
}

TEST_F(CliTest, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace brc
