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

// Glover's quadratic search for the two-bridge schemes r10, r16 and r25.
//
// Each of these moves is two 2-edge exchanges ("bridges") on the pairs
// (i1,i3) and (i2,i4). A bridge on (a,b) is either parallel,
//
//   cost_d(a,b) = c(a,a+1) + c(b,b+1) - c(a,b+1) - c(a+1,b),
//
// or crossed,
//
//   cost_c(a,b) = c(a,a+1) + c(b,b+1) - c(a,b) - c(a+1,b+1),
//
// and the schemes are r25 = d(i1,i3) + d(i2,i4), r16 = d(i1,i3) + c(i2,i4)
// and r10 = c(i1,i3) + d(i2,i4). Successors are plain +1 here, so no
// selection may remove {n-1, 0}; the search is repeated with labels shifted
// by one to cover those.

#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fouropt/faults.hpp"
#include "fouropt/schemes.hpp"

namespace fouropt {

enum class BridgeKind { kParallel, kCrossed };

inline constexpr std::array<int, 3> kGloverSchemes = {10, 16, 25};

template <CostAccess C>
typename C::value_type cost_d(int a, int b, const C& costs) {
  return costs(a, a + 1) + costs(b, b + 1) - (costs(a, b + 1) + costs(a + 1, b));
}

template <CostAccess C>
typename C::value_type cost_c(int a, int b, const C& costs) {
  return costs(a, a + 1) + costs(b, b + 1) - (costs(a, b) + costs(a + 1, b + 1));
}

template <CostAccess C>
typename C::value_type bridge_cost(BridgeKind kind, int a, int b, const C& costs) {
  return kind == BridgeKind::kParallel ? cost_d(a, b, costs) : cost_c(a, b, costs);
}

// A[i][j]: best bridge (a, j) with a <= i, defined for i <= j-2, j <= n-2.
// B[i][j]: best bridge (a, b) with a <= i-2 and i+2 <= b <= j-2, defined
// for i >= 2 and i+4 <= j <= n-1.
template <class T>
class GloverTables {
 public:
  GloverTables(int n, BridgeKind variant)
      : n_(n), variant_(variant), a_(cells()), b_(cells()), best_a_(cells()), best_b_(cells()) {}

  int size() const { return n_; }
  BridgeKind variant() const { return variant_; }

  T A(int i, int j) const { return a_[at(i, j)]; }
  T B(int i, int j) const { return b_[at(i, j)]; }
  int best_a(int i, int j) const { return best_a_[at(i, j)]; }
  std::pair<int, int> best_b(int i, int j) const { return best_b_[at(i, j)]; }

  template <CostAccess C>
  void build(const C& costs, const Faults& faults = {}) {
    const int last = n_ - 1;
    for (int j = 2; j <= last - 1; ++j) {
      a_[at(0, j)] = bridge_cost(variant_, 0, j, costs);
      best_a_[at(0, j)] = 0;
      for (int i = 1; i <= j - 2; ++i) {
        const T here = bridge_cost(variant_, i, j, costs);
        if (!faults.glover_a_drop_carry && !(here > a_[at(i - 1, j)])) {
          a_[at(i, j)] = a_[at(i - 1, j)];
          best_a_[at(i, j)] = best_a_[at(i - 1, j)];
        } else {
          a_[at(i, j)] = here;
          best_a_[at(i, j)] = i;
        }
      }
    }
    const int lag = faults.glover_b_off_by_one ? 1 : 2;
    for (int i = 2; i + 4 <= last; ++i) {
      b_[at(i, i + 4)] = a_[at(i - 2, i + 2)];
      best_b_[at(i, i + 4)] = {best_a_[at(i - 2, i + 2)], i + 2};
      for (int j = i + 5; j <= last; ++j) {
        const int b = std::min(j - lag, last - 1);
        const T take = a_[at(i - 2, b)];
        if (!faults.glover_b_drop_carry && !(take > b_[at(i, j - 1)])) {
          b_[at(i, j)] = b_[at(i, j - 1)];
          best_b_[at(i, j)] = best_b_[at(i, j - 1)];
        } else {
          b_[at(i, j)] = take;
          best_b_[at(i, j)] = {best_a_[at(i - 2, b)], b};
        }
      }
    }
  }

 private:
  std::size_t cells() const { return static_cast<std::size_t>(n_) * n_; }
  std::size_t at(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  BridgeKind variant_;
  std::vector<T> a_, b_;
  std::vector<int> best_a_;
  std::vector<std::pair<int, int>> best_b_;
};

template <CostAccess C>
GloverTables<typename C::value_type> build_tables(const C& costs, BridgeKind variant,
                                                  const Faults& faults = {}) {
  if (costs.size() < kMinSearchNodes) {
    throw std::invalid_argument("build_tables: need at least 8 nodes");
  }
  GloverTables<typename C::value_type> t(costs.size(), variant);
  t.build(costs, faults);
  return t;
}

namespace detail {

inline BridgeKind outer_bridge(int scheme_id) {
  return scheme_id == 16 ? BridgeKind::kCrossed : BridgeKind::kParallel;
}

inline BridgeKind inner_bridge(int scheme_id) {
  return scheme_id == 10 ? BridgeKind::kCrossed : BridgeKind::kParallel;
}

// max over 2 <= i2, i2+4 <= i4 <= n-2 of outer(i2,i4) + B[i2][i4], with no
// selection touching the edge {n-1, 0}. Produces the same values and
// arguments as GloverTables, but keeps only row i2-2 of A and the current
// row of B, so memory stays linear in n.
template <CostAccess C>
void glover_scan(const C& costs, int scheme_id, bool improving_only, int shift,
                 const Faults& faults, SearchResult<typename C::value_type>& result) {
  using T = typename C::value_type;
  const int n = costs.size();
  const int last = n - 1;
  const BridgeKind outer = outer_bridge(scheme_id);
  const BridgeKind inner = inner_bridge(scheme_id);
  const int lag = faults.glover_b_off_by_one ? 1 : 2;

  std::vector<T> a_row(n);
  std::vector<int> a_best(n);
  for (int j = 2; j <= last - 1; ++j) {
    a_row[j] = bridge_cost(inner, 0, j, costs);
    a_best[j] = 0;
  }
  for (int i2 = 2; i2 + 4 <= n - 2; ++i2) {
    const int i = i2 - 2;  // a_row holds A[i][*]
    if (i > 0) {
      for (int j = i + 2; j <= last - 1; ++j) {
        const T here = bridge_cost(inner, i, j, costs);
        if (faults.glover_a_drop_carry || here > a_row[j]) {
          a_row[j] = here;
          a_best[j] = i;
        }
      }
    }
    T b_val = a_row[i2 + 2];
    std::pair<int, int> b_best = {a_best[i2 + 2], i2 + 2};
    for (int i4 = i2 + 4; i4 <= n - 2; ++i4) {
      if (i4 > i2 + 4) {
        const int b = std::min(i4 - lag, last - 1);
        if (faults.glover_b_drop_carry || a_row[b] > b_val) {
          b_val = a_row[b];
          b_best = {a_best[b], b};
        }
      }
      ++result.evaluated;
      const T g = bridge_cost(outer, i2, i4, costs) + b_val;
      if (improving_only && !(g > T{})) continue;
      const auto [i1, i3] = b_best;
      Move<T> m{scheme_id, Selection{{i1 + shift, i2 + shift, i3 + shift, i4 + shift}}, g};
      if (!result.best || better_move(m, *result.best)) result.best = m;
    }
  }
}

}  // namespace detail

// Best moves for the given subset of {10, 16, 25}.
template <CostAccess C>
SearchResult<typename C::value_type> best_move_glover(const C& costs,
                                                      std::span<const int> scheme_ids,
                                                      bool improving_only = true,
                                                      const Faults& faults = {}) {
  using T = typename C::value_type;
  SearchResult<T> result;
  const int n = costs.size();
  if (n < kMinSearchNodes) return result;
  for (int id : scheme_ids) {
    if (id != 10 && id != 16 && id != 25) {
      throw std::invalid_argument("best_move_glover: r" + std::to_string(id) +
                                  " is not a two-bridge scheme");
    }
  }
  auto run = [&](const auto& view, int shift) {
    for (int id : scheme_ids) detail::glover_scan(view, id, improving_only, shift, faults, result);
  };
  run(costs, 0);
  run(ShiftedView<C>(costs, 1), 1);
  return result;
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move_glover(const C& costs, bool improving_only = true,
                                                      const Faults& faults = {}) {
  return best_move_glover(costs, std::span<const int>(kGloverSchemes), improving_only, faults);
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move_r25(const C& costs, bool improving_only = true) {
  const int ids[] = {25};
  return best_move_glover(costs, std::span<const int>(ids), improving_only);
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move_r16(const C& costs, bool improving_only = true) {
  const int ids[] = {16};
  return best_move_glover(costs, std::span<const int>(ids), improving_only);
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move_r10(const C& costs, bool improving_only = true) {
  const int ids[] = {10};
  return best_move_glover(costs, std::span<const int>(ids), improving_only);
}

}  // namespace fouropt
