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

#include <random>

#include "test_util.hpp"

namespace ladder {
namespace {

using testing::chi;
using testing::generic_instance;
using testing::h;
using testing::instance;
using testing::ladder;
using testing::seg;

// Ladders with 1 <= t <= max_t whose points lie among n consecutive lattice points,
// counted on plain integers.
int count_ladders(int n, int max_t) {
  int total = 0;
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self) -> void {
    if (!cur.empty()) ++total;
    if (static_cast<int>(cur.size()) == max_t) return;
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y)
        if (cur.empty() || (x > cur.back().first && y > cur.back().second)) {
          cur.emplace_back(x, y);
          self(self);
          cur.pop_back();
        }
  };
  rec(rec);
  return total;
}

TEST(GridTest, CountMatchesIndependentEnumeration) {
  // half-integral points 1/2..9/2 and integral points 1..4
  const int ladders = count_ladders(5, 3) + count_ladders(4, 3);
  // five alphas on the selfdual line, none on the generic one
  EXPECT_EQ(enumerate_instances(GridSpec::standard()).size(), static_cast<std::size_t>(6 * ladders));
  EXPECT_EQ(ladders, 155);
}

TEST(GridTest, Deterministic) {
  const auto a = enumerate_instances(GridSpec::standard());
  const auto b = enumerate_instances(GridSpec::standard());
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(json(a[i]), json(b[i]));
}

TEST(GridTest, SmallerGridIsASubset) {
  GridSpec g = GridSpec::standard();
  g.max_t = 1;
  const auto small = enumerate_instances(g);
  EXPECT_EQ(small.size(), static_cast<std::size_t>(6 * (count_ladders(5, 1) + count_ladders(4, 1))));
  for (const auto& inst : small) EXPECT_EQ(inst.t(), 1);
}

TEST(MstarOracleTest, Examples) {
  EXPECT_TRUE(check_mstar_oracle(ladder({{"1/2", "1/2"}})).pass);
  EXPECT_TRUE(check_mstar_oracle(ladder({{"1/2", "3/2"}, {"3/2", "5/2"}})).pass);
  EXPECT_TRUE(check_mstar_oracle(ladder({{"1/2", "1/2"}, {"3/2", "3/2"}, {"5/2", "5/2"}})).pass);
  EXPECT_TRUE(check_mstar_oracle(ladder({{"1", "3"}, {"2", "4"}}, chi())).pass);
}

TEST(MstarOracleTest, AllOracleLadders) {
  const auto ladders = oracle_ladders();
  EXPECT_FALSE(ladders.empty());
  for (const auto& l : ladders) EXPECT_TRUE(check_mstar_oracle(l).pass) << json(l).dump();
}

TEST(MultiplicativityTest, Examples) {
  const MultiSegment one{}, d{seg("1/2", "1/2")};
  EXPECT_TRUE(check_Mstar_multiplicative(one, one).pass);
  EXPECT_TRUE(check_Mstar_multiplicative(one, d).pass);
  EXPECT_TRUE(check_Mstar_multiplicative(d, d).pass);
}

TEST(MultiplicativityTest, RandomTriples) {
  const auto window = multiplicativity_window();
  std::mt19937 gen(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
  for (int i = 0; i < 40; ++i) {
    const MultiSegment a = window[pick(gen)] * window[pick(gen)];
    const MultiSegment b = window[pick(gen)];
    EXPECT_TRUE(check_Mstar_multiplicative(a, b).pass) << json(a).dump() << json(b).dump();
  }
}

TEST(DecompositionCheckTest, PassesOnExamples) {
  EXPECT_TRUE(check_decomposition(instance({{"1/2", "1/2"}}, "1/2")).pass);
  EXPECT_TRUE(check_decomposition(instance({{"1/2", "3/2"}, {"3/2", "5/2"}}, "3/2")).pass);
  EXPECT_TRUE(check_decomposition(generic_instance({{"1/2", "3/2"}, {"3/2", "5/2"}})).pass);
  EXPECT_TRUE(check_decomposition(instance({{"1/2", "3/2"}, {"5/2", "7/2"}}, "1/2")).pass);
  const auto r = check_decomposition(generic_instance({{"1/2", "1/2"}}));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.detail, "length 1");
}

Decomposition drop_last(const Instance& inst) {
  Decomposition d = decompose(inst);
  if (d.constituents.size() > 1) d.constituents.pop_back();
  return d;
}

Decomposition duplicate_first(const Instance& inst) {
  Decomposition d = decompose(inst);
  d.constituents.push_back(d.constituents.front());
  return d;
}

Decomposition drop_tempered(const Instance& inst) {
  Decomposition d = decompose(inst);
  std::erase_if(d.constituents, [](const Constituent& c) { return c.label.is_tempered(); });
  return d;
}

Decomposition shift_langlands(const Instance& inst) {
  Decomposition d = decompose(inst);
  auto& last = d.constituents.back().label;
  std::vector<Segment> segs;
  for (const auto& s : last.negatives) segs.emplace_back(s.line(), s.x() - 1, s.y() - 1);
  last = ConstituentLabel(MultiSegment(segs), last.base());
  return d;
}

Decomposition throws(const Instance&) { throw consistency_error("boom"); }

TEST(DecompositionCheckTest, FaultsAreCaught) {
  const Instance e2 = instance({{"1/2", "3/2"}, {"3/2", "5/2"}}, "3/2");
  for (const DecomposeFn& bad : {DecomposeFn(drop_last), DecomposeFn(duplicate_first), DecomposeFn(drop_tempered),
                                 DecomposeFn(shift_langlands), DecomposeFn(throws)}) {
    const auto r = check_decomposition(e2, bad);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.counterexample.is_null());
    EXPECT_EQ(r.subject, json(e2));
  }
  const auto r = check_decomposition(e2, duplicate_first);
  const auto failures = r.counterexample.at("failures").get<std::vector<std::string>>();
  EXPECT_NE(std::find(failures.begin(), failures.end(), "constituent repeated"), failures.end());
  EXPECT_NE(std::find(failures.begin(), failures.end(), "length 4 != m+1 = 3"), failures.end());
}

TEST(DecompositionCheckTest, DropLastIsCaughtOnReducibleGridInstances) {
  GridSpec g = GridSpec::standard();
  g.max_t = 2;
  int reducible = 0;
  for (const auto& inst : enumerate_instances(g)) {
    const auto r = check_decomposition(inst, drop_last);
    if (reducibility_test(inst)) {
      ++reducible;
      EXPECT_FALSE(r.pass);
    } else {
      EXPECT_TRUE(r.pass);
    }
  }
  EXPECT_GT(reducible, 0);
}

TEST(VerifyTest, DefaultGridPasses) {
  const auto reports = run_verify({});
  EXPECT_EQ(reports.size(), oracle_ladders().size() + multiplicativity_window().size() * multiplicativity_window().size() +
                                enumerate_instances(GridSpec::standard()).size());
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << json(r).dump();
}

TEST(VerifyTest, ReportsAreReproducible) {
  VerifyOptions opts;
  opts.grid.max_t = 1;
  const auto a = run_verify(opts), b = run_verify(opts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(json(a[i]).dump(), json(b[i]).dump());
}

}  // namespace
}  // namespace ladder
