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

#include <optional>
#include <stdexcept>
#include <vector>

#include "fouropt/glover.hpp"
#include "fouropt/instance.hpp"
#include "fouropt/oracle.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace fouropt {
namespace {

using Matrix = CostMatrix<Cost>;

Matrix six_nodes() {
  Matrix m(6);
  const Cost rows[6][6] = {{0, 3, 7, 2, 9, 4},  {3, 0, 5, 8, 1, 6}, {7, 5, 0, 4, 2, 9},
                           {2, 8, 4, 0, 6, 3},  {9, 1, 2, 6, 0, 5}, {4, 6, 9, 3, 5, 0}};
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) m.set(u, v, rows[u][v]);
  return m;
}

TEST(BridgeCostTest, HandComputed) {
  const Matrix m = six_nodes();
  // d(0,3) = c(0,1)+c(3,4) - c(0,4) - c(1,3) = 3+6-9-8
  EXPECT_EQ(cost_d(0, 3, m), -8);
  // c(0,3) = c(0,1)+c(3,4) - c(0,3) - c(1,4) = 3+6-2-1
  EXPECT_EQ(cost_c(0, 3, m), 6);
  EXPECT_EQ(cost_d(1, 4, m), 5 + 5 - 6 - 2);
  EXPECT_EQ(cost_c(1, 4, m), 5 + 5 - 1 - 9);
}

TEST(BridgeCostTest, SumIdentity) {
  const Matrix m = generate_random(RandomMatrixSpec{15, 1000, 4});
  for (int a = 0; a + 2 <= 13; ++a) {
    for (int b = a + 2; b <= 13; ++b) {
      EXPECT_EQ(cost_d(a, b, m) + cost_c(a, b, m),
                2 * (m(a, a + 1) + m(b, b + 1)) - m(a, b + 1) - m(a + 1, b) - m(a, b) - m(a + 1, b + 1));
    }
  }
}

// Bridge schemes written out directly on selections.
Cost bridge_gain(int id, const Selection& s, const Matrix& m) {
  const int i1 = s[1], i2 = s[2], i3 = s[3], i4 = s[4];
  switch (id) {
    case 25: return cost_d(i1, i3, m) + cost_d(i2, i4, m);
    case 16: return cost_d(i1, i3, m) + cost_c(i2, i4, m);
    case 10: return cost_c(i1, i3, m) + cost_d(i2, i4, m);
  }
  throw std::logic_error("not a bridge scheme");
}

TEST(BridgeCostTest, SchemeIdentitiesAtTwelve) {
  const Matrix m = generate_random(RandomMatrixSpec{12, 1000, 0});
  for (const auto& s : enumerate_complete_selections(12)) {
    if (s[4] == 11) continue;  // the closing edge {11, 0} is not a +1 edge
    for (int id : kGloverSchemes) EXPECT_EQ(gain(scheme(id), s, m), bridge_gain(id, s, m)) << to_string(s);
  }
}

TEST(GloverTablesTest, BaseCase) {
  const Matrix m = generate_random(RandomMatrixSpec{16, 1000, 2});
  for (auto kind : {BridgeKind::kParallel, BridgeKind::kCrossed}) {
    const auto t = build_tables(m, kind);
    for (int i = 2; i + 4 <= 15; ++i) EXPECT_EQ(t.B(i, i + 4), t.A(i - 2, i + 2));
  }
}

TEST(GloverTablesTest, MatchDirectMaximization) {
  for (int n = 8; n <= 14; ++n) {
    const Matrix m = generate_random(RandomMatrixSpec{n, 1000, static_cast<std::uint64_t>(n)});
    for (auto kind : {BridgeKind::kParallel, BridgeKind::kCrossed}) {
      const auto t = build_tables(m, kind);
      for (int j = 2; j <= n - 2; ++j) {
        for (int i = 0; i <= j - 2; ++i) {
          std::optional<Cost> want;
          for (int a = 0; a <= i; ++a) {
            const Cost v = bridge_cost(kind, a, j, m);
            if (!want || v > *want) want = v;
          }
          EXPECT_EQ(t.A(i, j), *want) << "A n=" << n << " " << i << "," << j;
          EXPECT_EQ(bridge_cost(kind, t.best_a(i, j), j, m), t.A(i, j));
        }
      }
      for (int i = 2; i + 4 <= n - 1; ++i) {
        for (int j = i + 4; j <= n - 1; ++j) {
          std::optional<Cost> want;
          for (int a = 0; a <= i - 2; ++a) {
            for (int b = i + 2; b <= j - 2; ++b) {
              const Cost v = bridge_cost(kind, a, b, m);
              if (!want || v > *want) want = v;
            }
          }
          EXPECT_EQ(t.B(i, j), *want) << "B n=" << n << " " << i << "," << j;
          const auto [a, b] = t.best_b(i, j);
          EXPECT_LE(a, i - 2);
          EXPECT_GE(b, i + 2);
          EXPECT_LE(b, j - 2);
          EXPECT_EQ(bridge_cost(kind, a, b, m), t.B(i, j));
        }
      }
    }
  }
}

TEST(GloverTablesTest, TenNodeCorner) {
  const Matrix m = generate_random(RandomMatrixSpec{10, 1000, 0});
  const auto t = build_tables(m, BridgeKind::kParallel);
  Cost want = cost_d(0, 6, m);
  for (int a = 0; a <= 2; ++a)
    for (int b = 6; b <= 7; ++b) want = std::max(want, cost_d(a, b, m));
  EXPECT_EQ(t.B(4, 9), want);
}

TEST(GloverEngineTest, PerSchemeMatchesOracle) {
  for (int n = 8; n <= 20; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Matrix m = generate_random(RandomMatrixSpec{n, 1000, seed});
      for (int id : kGloverSchemes) {
        const int one[] = {id};
        const auto got = best_move_glover(m, std::span<const int>(one), false);
        const auto want = best_move_brute(m, std::span<const int>(one), false);
        ASSERT_TRUE(got.best.has_value());
        EXPECT_EQ(got.best->gain, want.best->gain) << "n=" << n << " seed=" << seed << " r" << id;
        ASSERT_TRUE(is_complete_selection(got.best->selection, n));
        EXPECT_EQ(gain(scheme(id), got.best->selection, m), got.best->gain);
      }
    }
  }
}

TEST(GloverEngineTest, SeedZeroFixture) {
  const Matrix m = generate_random(RandomMatrixSpec{12, 1000, 0});
  const int r10[] = {10}, r16[] = {16}, r25[] = {25};
  EXPECT_EQ(best_move_glover(m, std::span<const int>(r10), false).best->gain, 2395);
  EXPECT_EQ(best_move_glover(m, std::span<const int>(r16), false).best->gain, 2581);
  EXPECT_EQ(best_move_glover(m, std::span<const int>(r25), false).best->gain, 2309);
  const auto all = best_move_glover(m, false);
  EXPECT_EQ(all.best->gain, 2581);
  EXPECT_EQ(all.best->scheme_id, 16);
}

TEST(GloverEngineTest, NeverAboveFullOracle) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Matrix m = generate_random(RandomMatrixSpec{13, 1000, seed});
    EXPECT_LE(best_move_glover(m, false).best->gain, best_move_brute(m, false).best->gain);
  }
}

TEST(GloverEngineTest, UniformMatrixHasNoImprovingMove) {
  EXPECT_FALSE(best_move_glover(testing::uniform_matrix(14)).best.has_value());
}

TEST(GloverEngineTest, RejectsOtherSchemes) {
  const Matrix m = generate_random(RandomMatrixSpec{10, 1000, 0});
  const int bad[] = {10, 3};
  EXPECT_THROW(best_move_glover(m, std::span<const int>(bad)), std::invalid_argument);
}

TEST(GloverEngineTest, FloatingCosts) {
  const auto m = generate_random(RandomEuclideanSpec{17, 1000, 8});
  CostMatrix<double> f(17);
  for (int u = 0; u < 17; ++u)
    for (int v = u + 1; v < 17; ++v) f.set(u, v, m(u, v) * 0.25);
  EXPECT_DOUBLE_EQ(best_move_glover(f, false).best->gain,
                   best_move_brute(f, std::span<const int>(kGloverSchemes), false).best->gain);
}

}  // namespace
}  // namespace fouropt
