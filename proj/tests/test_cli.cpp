// Copyright 2026 The ladder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ladder/cli.hpp"
#include "test_util.hpp"

namespace ladder {
namespace {

namespace fs = std::filesystem;

std::string golden(const std::string& name) { return std::string(LADDER_GOLDEN_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ladder_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args, const DecomposeFn& fn = decompose) {
    args.insert(args.begin(), "ladder");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return cli::run(static_cast<int>(argv.size()), argv.data(), fn);
  }

  std::string out(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, DecomposeMatchesGoldenJson) {
  for (const std::string e : {"e1", "e2", "e3", "e4"}) {
    ASSERT_EQ(run({"decompose", golden(e + ".instance.json"), "--out", out(e)}), 0);
    EXPECT_EQ(slurp(out(e)), slurp(golden(e + ".decompose.json"))) << e;
  }
}

TEST_F(CliTest, DecomposeMatchesGoldenText) {
  for (const std::string e : {"e1", "e2", "e3", "e4"}) {
    ASSERT_EQ(run({"decompose", golden(e + ".instance.json"), "--format", "text", "--out", out(e)}), 0);
    EXPECT_EQ(slurp(out(e)), slurp(golden(e + ".decompose.txt"))) << e;
  }
}

TEST_F(CliTest, ConstituentCounts) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {{"e1", 2}, {"e2", 3}, {"e3", 1}, {"e4", 2}};
  for (const auto& [e, n] : expected) {
    ASSERT_EQ(run({"decompose", golden(e + ".instance.json"), "--out", out(e)}), 0);
    const json j = json::parse(slurp(out(e)));
    EXPECT_EQ(j.at("constituents").size(), n) << e;
    EXPECT_EQ(j.at("length"), n);
    EXPECT_EQ(j.at("expected_length"), n);
  }
}

TEST_F(CliTest, OutputIsStableAcrossRuns) {
  ASSERT_EQ(run({"decompose", golden("e2.instance.json"), "--out", out("a")}), 0);
  ASSERT_EQ(run({"decompose", golden("e2.instance.json"), "--out", out("b")}), 0);
  EXPECT_EQ(slurp(out("a")), slurp(out("b")));
}

TEST_F(CliTest, InvalidInstanceExitsTwo) {
  EXPECT_EQ(run({"decompose", golden("bad_alpha.instance.json")}), 2);
  EXPECT_EQ(run({"decompose", out("missing.json")}), 2);
  std::ofstream(out("garbage.json")) << "{not json";
  EXPECT_EQ(run({"decompose", out("garbage.json")}), 2);
  std::ofstream(out("unordered.json"))
      << R"({"rho":{"name":"rho","selfdual":true},"sigma":{"name":"sigma_c"},"alpha":{"twice":1},)"
      << R"("segments":[{"a":{"twice":3},"b":{"twice":3}},{"a":{"twice":1},"b":{"twice":5}}]})";
  EXPECT_EQ(run({"decompose", out("unordered.json")}), 2);
  EXPECT_EQ(run({"mustar", golden("bad_alpha.instance.json")}), 2);
  EXPECT_EQ(run({"decompose", golden("e1.instance.json"), "--format", "yaml"}), 2);
}

TEST_F(CliTest, MustarCountsEqualLadPrime) {
  ASSERT_EQ(run({"mustar", golden("e1.instance.json"), "--out", out("m1")}), 0);
  EXPECT_EQ(json::parse(slurp(out("m1"))).at("count"), 3);
  ASSERT_EQ(run({"mustar", golden("e2.instance.json"), "--out", out("m2")}), 0);
  const auto inst = parse_instance(slurp(golden("e2.instance.json")));
  EXPECT_EQ(json::parse(slurp(out("m2"))).at("count"), lad_prime_enumerate(inst.ladder()).size());
  ASSERT_EQ(run({"mustar", golden("e1.instance.json"), "--format", "text", "--out", out("t1")}), 0);
  EXPECT_NE(slurp(out("t1")).find("count: 3"), std::string::npos);
}

TEST_F(CliTest, MstarBases) {
  ASSERT_EQ(run({"mstar", golden("e2.instance.json"), "--out", out("l")}), 0);
  EXPECT_EQ(json::parse(slurp(out("l"))).at("basis"), "ladder");
  ASSERT_EQ(run({"mstar", golden("e2.instance.json"), "--basis", "standard", "--out", out("s")}), 0);
  const json s = json::parse(slurp(out("s")));
  EXPECT_EQ(s.at("basis"), "standard");
  const auto inst = parse_instance(slurp(golden("e2.instance.json")));
  EXPECT_EQ(s, json(mstar_standard(ladder_to_standard(inst.ladder()))));
}

TEST_F(CliTest, ReduceTest) {
  ASSERT_EQ(run({"reduce-test", golden("e4.instance.json"), "--out", out("r")}), 0);
  const json r = json::parse(slurp(out("r")));
  EXPECT_EQ(r.at("reducible"), true);
  EXPECT_EQ(r.at("expected_length"), 2);
  EXPECT_EQ(r.at("index_range"), json::array({1, 1}));
  ASSERT_EQ(run({"reduce-test", golden("e3.instance.json"), "--out", out("r3")}), 0);
  EXPECT_EQ(json::parse(slurp(out("r3"))).at("reducible"), false);
}

TEST_F(CliTest, UnicodeRendering) {
  ASSERT_EQ(run({"decompose", golden("e2.instance.json"), "--format", "text", "--unicode", "--out", out("u")}), 0);
  const std::string u = slurp(out("u"));
  EXPECT_NE(u.find("δ([ν^{-5/2}ρ, ν^{-3/2}ρ])"), std::string::npos);
  EXPECT_NE(u.find("σ_1"), std::string::npos);
  EXPECT_EQ(u.find("nu^"), std::string::npos);
}

TEST_F(CliTest, VerifySubsetPasses) {
  EXPECT_EQ(run({"verify", "--max-t", "1", "--out", out("v")}), 0);
  EXPECT_TRUE(slurp(out("v")).empty());
  EXPECT_EQ(run({"verify", "--max-t", "1", "--all", "--out", out("all")}), 0);
  std::istringstream lines(slurp(out("all")));
  std::size_t n = 0;
  for (std::string line; std::getline(lines, line); ++n) EXPECT_TRUE(json::parse(line).at("pass").get<bool>());
  EXPECT_GT(n, 0u);
}

TEST_F(CliTest, VerifyWithInjectedFaultExitsThree) {
  const DecomposeFn faulty = [](const Instance& inst) {
    Decomposition d = decompose(inst);
    if (d.constituents.size() > 1) d.constituents.pop_back();
    return d;
  };
  EXPECT_EQ(run({"verify", "--max-t", "1", "--out", out("f")}, faulty), 3);
  std::istringstream lines(slurp(out("f")));
  std::string first;
  ASSERT_TRUE(static_cast<bool>(std::getline(lines, first)));
  const json r = json::parse(first);
  EXPECT_FALSE(r.at("pass").get<bool>());
  EXPECT_FALSE(r.at("counterexample").is_null());
  EXPECT_EQ(check_decomposition(parse_instance(r.at("subject")), faulty).pass, false);
}

TEST_F(CliTest, DecomposeConsistencyFailureExitsThree) {
  const DecomposeFn broken = [](const Instance&) -> Decomposition { throw consistency_error("length"); };
  EXPECT_EQ(run({"decompose", golden("e1.instance.json")}, broken), 3);
}

}  // namespace
}  // namespace ladder
