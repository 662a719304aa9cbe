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

// Reference computations shared by the tests. Nothing here calls into the
// engines under test.

#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "fouropt/model.hpp"
#include "fouropt/schemes.hpp"

namespace fouropt::testing {

inline CostMatrix<Cost> uniform_matrix(int n, Cost value = 1) {
  CostMatrix<Cost> m(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) m.set(u, v, value);
  return m;
}

inline std::set<std::pair<int, int>> edge_set(const Tour& t) {
  std::set<std::pair<int, int>> edges;
  const int n = t.size();
  for (int p = 0; p < n; ++p) {
    const int u = t[p], v = t[(p + 1) % n];
    edges.insert({std::min(u, v), std::max(u, v)});
  }
  return edges;
}

// Gain as the difference of two full tour lengths.
template <class C>
Cost length_difference_gain(const Scheme& r, const Selection& s, const C& costs) {
  const Tour t = Tour::canonical(costs.size());
  return tour_length(t, costs) - tour_length(apply_move(t, r, s), costs);
}

// Every quadruple with all four cyclic gaps >= 2, by filtering all of them.
inline std::vector<Selection> brute_complete_selections(int n) {
  std::vector<Selection> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (b - a >= 2 && c - b >= 2 && d - c >= 2 && a + n - d >= 2) out.push_back({{a, b, c, d}});
        }
  return out;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fouropt::testing
