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

// Exhaustive best-move search: every scheme on every complete selection.

#pragma once

#include <span>
#include <vector>

#include "fouropt/schemes.hpp"

namespace fouropt {

// Calls `visit(selection)` for every complete selection, lexicographically.
template <class Visitor>
void for_each_complete_selection(int n, Visitor&& visit) {
  if (n < kMinSearchNodes) return;
  Selection s;
  for (s.i[0] = 0; s.i[0] < n; ++s.i[0]) {
    // i4 may reach n-1 only if i1 leaves room for the wrap edge.
    const int last = s.i[0] == 0 ? n - 2 : n - 1;
    for (s.i[1] = s.i[0] + 2; s.i[1] + 4 <= last; ++s.i[1]) {
      for (s.i[2] = s.i[1] + 2; s.i[2] + 2 <= last; ++s.i[2]) {
        for (s.i[3] = s.i[2] + 2; s.i[3] <= last; ++s.i[3]) visit(static_cast<const Selection&>(s));
      }
    }
  }
}

inline std::vector<Selection> enumerate_complete_selections(int n) {
  std::vector<Selection> out;
  for_each_complete_selection(n, [&](const Selection& s) { out.push_back(s); });
  return out;
}

// Brute force over `scheme_ids` x all complete selections. With
// improving_only the result is empty unless some gain is > 0.
template <CostAccess C>
SearchResult<typename C::value_type> best_move_brute(const C& costs,
                                                     std::span<const int> scheme_ids,
                                                     bool improving_only = true) {
  using T = typename C::value_type;
  SearchResult<T> result;
  const int n = costs.size();
  std::vector<ReinsertionSet> sets;
  for (int id : scheme_ids) sets.push_back(inserted_edge_templates(scheme(id)));

  for_each_complete_selection(n, [&](const Selection& s) {
    for (std::size_t k = 0; k < sets.size(); ++k) {
      ++result.evaluated;
      const Move<T> m{scheme_ids[k], s, gain(sets[k], s, costs)};
      if (improving_only && !(m.gain > T{})) continue;
      if (!result.best || better_move(m, *result.best)) result.best = m;
    }
  });
  return result;
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move_brute(const C& costs, bool improving_only = true) {
  const auto ids = all_scheme_ids();
  return best_move_brute(costs, std::span<const int>(ids), improving_only);
}

}  // namespace fouropt
