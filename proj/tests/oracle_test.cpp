// Copyright 2026 The fouropt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include "fouropt/instance.hpp"
#include "fouropt/oracle.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace fouropt {
namespace {

TEST(SelectionEnumerationTest, SmallCounts) {
  EXPECT_EQ(enumerate_complete_selections(8),
            (std::vector<Selection>{{{0, 2, 4, 6}}, {{1, 3, 5, 7}}}));
  EXPECT_EQ(enumerate_complete_selections(9).size(), 9u);
  EXPECT_EQ(enumerate_complete_selections(12).size(), 105u);
  EXPECT_TRUE(enumerate_complete_selections(7).empty());
}

TEST(SelectionEnumerationTest, MatchesFilterAndClosedForm) {
  for (int n = 8; n <= 30; ++n) {
    const auto fast = enumerate_complete_selections(n);
    EXPECT_EQ(fast, testing::brute_complete_selections(n)) << n;
    EXPECT_EQ(static_cast<long long>(fast.size()), n * testing::binomial(n - 5, 3) / 4) << n;
  }
}

TEST(BruteTest, EvaluatedCount) {
  const auto m = generate_random(RandomMatrixSpec{8, 100, 1});
  EXPECT_EQ(best_move_brute(m, false).evaluated, 50);
  EXPECT_EQ(best_move_brute(generate_random(RandomMatrixSpec{12, 100, 1}), false).evaluated,
            25 * 105);
}

TEST(BruteTest, UniformMatrixHasNoImprovingMove) {
  const auto r = best_move_brute(testing::uniform_matrix(12), true);
  EXPECT_FALSE(r.best.has_value());
  const auto any = best_move_brute(testing::uniform_matrix(12), false);
  ASSERT_TRUE(any.best.has_value());
  // Every gain ties at zero: the tie-break picks r1 on the first selection.
  EXPECT_EQ(any.best->scheme_id, 1);
  EXPECT_EQ(any.best->selection, (Selection{{0, 2, 4, 6}}));
}

// Regression fixture: seed-0 random matrix, n = 12, costs in [1, 1000].
TEST(BruteTest, SeedZeroFixture) {
  const auto m = generate_random(RandomMatrixSpec{12, 1000, 0});
  const auto r = best_move_brute(m, false);
  ASSERT_TRUE(r.best.has_value());
  EXPECT_EQ(r.best->scheme_id, 24);
  EXPECT_EQ(r.best->selection, (Selection{{1, 3, 6, 9}}));
  EXPECT_EQ(r.best->gain, 2635);
  EXPECT_EQ(r.best->gain, testing::length_difference_gain(scheme(24), r.best->selection, m));
}

TEST(BruteTest, Deterministic) {
  const auto m = generate_random(RandomMatrixSpec{14, 50, 8});
  const auto a = best_move_brute(m, false);
  const auto b = best_move_brute(m, false);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.evaluated, b.evaluated);
}

TEST(BruteTest, RestrictionConsistency) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 8);
    // Small cost range forces plenty of ties.
    const auto m = generate_random(RandomMatrixSpec{n, 4, rng()});
    std::vector<int> left, right;
    for (int id = 1; id <= 25; ++id) (rng() % 2 ? left : right).push_back(id);
    if (left.empty() || right.empty()) continue;
    auto split = best_move_brute(m, std::span<const int>(left), false);
    merge_into(split, best_move_brute(m, std::span<const int>(right), false));
    const auto whole = best_move_brute(m, false);
    EXPECT_EQ(split.best, whole.best);
    EXPECT_EQ(split.evaluated, whole.evaluated);
  }
}

TEST(BruteTest, ImprovingOnlyReturnsPositiveGain) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto m = generate_random(RandomMatrixSpec{10, 1000, seed});
    const auto all = best_move_brute(m, false);
    const auto improving = best_move_brute(m, true);
    if (all.best->gain > 0) {
      EXPECT_EQ(improving.best, all.best);
    } else {
      EXPECT_FALSE(improving.best.has_value());
    }
  }
}

}  // namespace
}  // namespace fouropt
