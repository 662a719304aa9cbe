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

// Cubic best-move search of de Berg, Buchin, Jansen and Woeginger.
//
// For a scheme, the four cut slots split into two independent pairs A and
// B: every inserted edge joins an A-slot to a B-slot. The gain of a move
// then decomposes as
//
//   c(a1,a1+1) + c(a2,a2+1) + ~c1(b1 | a1,a2) + ~c2(b2 | a1,a2),
//
// where ~c(b) is the removed edge at b minus the two inserted edges
// touching it. Fixing (a1, a2) in all Theta(n^2) ways, the best (b1, b2)
// comes out of two running-maximum arrays in Theta(n).

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fouropt/faults.hpp"
#include "fouropt/schemes.hpp"

namespace fouropt {

// Where the two b-slots sit relative to a1 < a2.
enum class RangePattern {
  kInterleaved,  // A = {1,3}: a1 < b1 < a2 < b2
  kNested,       // A = {1,4}: a1 < b1 < b2 < a2
  kTrailing,     // A = {1,2}: a1 < a2 < b1 < b2
};

inline const char* to_string(RangePattern p) {
  switch (p) {
    case RangePattern::kInterleaved: return "interleaved";
    case RangePattern::kNested: return "nested";
    case RangePattern::kTrailing: return "trailing";
  }
  return "?";
}

// One inserted edge as seen from the b-slot it touches.
struct CompletionTerm {
  bool b_primed = false;
  int a_index = 0;  // 0 -> a1, 1 -> a2
  bool a_primed = false;
  int template_index = 0;  // position in inserted_edge_templates()
};

struct PairingPlan {
  int scheme_id = 0;
  std::array<int, 2> a_slots{};
  std::array<int, 2> b_slots{};
  RangePattern pattern = RangePattern::kInterleaved;
  std::array<std::array<CompletionTerm, 2>, 2> terms{};  // per b-slot
};

inline PairingPlan pairing_plan(const Scheme& r) {
  const ReinsertionSet set = inserted_edge_templates(r);
  for (int partner : {3, 4, 2}) {
    auto in_a = [&](int slot) { return slot == 1 || slot == partner; };
    const bool independent = std::all_of(set.begin(), set.end(), [&](const EdgeTemplate& e) {
      return in_a(e.a.slot) != in_a(e.b.slot);
    });
    if (!independent) continue;

    PairingPlan plan;
    plan.scheme_id = r.id;
    plan.a_slots = {1, partner};
    int nb = 0;
    for (int slot = 2; slot <= 4; ++slot) {
      if (slot != partner) plan.b_slots[nb++] = slot;
    }
    plan.pattern = partner == 3   ? RangePattern::kInterleaved
                   : partner == 4 ? RangePattern::kNested
                                  : RangePattern::kTrailing;
    std::array<int, 2> filled{};
    for (int t = 0; t < 4; ++t) {
      const Label b = in_a(set[t].a.slot) ? set[t].b : set[t].a;
      const Label a = in_a(set[t].a.slot) ? set[t].a : set[t].b;
      const int k = b.slot == plan.b_slots[0] ? 0 : 1;
      plan.terms[k][filled[k]++] = {b.primed, a.slot == 1 ? 0 : 1, a.primed, t};
    }
    if (filled[0] != 2 || filled[1] != 2) {
      throw std::logic_error("pairing_plan: unbalanced b-slots for r" + std::to_string(r.id));
    }
    return plan;
  }
  throw std::logic_error("pairing_plan: no independent pairing for r" + std::to_string(r.id));
}

// Feasible positions for b1 and b2 once a1 < a2 are fixed.
struct CompletionRanges {
  int min1, max1, min2, max2;

  bool empty() const { return min1 > max1 || min2 > max2; }
};

// Last position i4 may take: n-1, unless i1 = 0 where {n-1, 0} would be
// adjacent to the first removed edge.
inline int last_cut(int a1, int n) { return n - 1 - (a1 == 0 ? 1 : 0); }

inline CompletionRanges completion_ranges(RangePattern p, int a1, int a2, int n) {
  const int end = last_cut(a1, n);
  switch (p) {
    case RangePattern::kInterleaved: return {a1 + 2, a2 - 2, a2 + 2, end};
    case RangePattern::kNested:
      if (a2 > end) return {0, -1, 0, -1};
      return {a1 + 2, a2 - 4, a1 + 4, a2 - 2};
    case RangePattern::kTrailing: return {a2 + 2, end - 2, a2 + 4, end};
  }
  return {0, -1, 0, -1};
}

// Range of a2 for which completion_ranges is nonempty.
inline std::pair<int, int> a2_range(RangePattern p, int a1, int n) {
  const int end = last_cut(a1, n);
  switch (p) {
    case RangePattern::kInterleaved: return {a1 + 4, end - 2};
    case RangePattern::kNested: return {a1 + 6, end};
    case RangePattern::kTrailing: return {a1 + 2, end - 4};
  }
  return {0, -1};
}

template <class T>
struct Completion {
  T contribution{};
  int b1 = 0;
  int b2 = 0;
};

// ~c for b-slot k at position b, given the fixed a-positions.
template <CostAccess C>
class CompletionCosts {
 public:
  using T = typename C::value_type;

  CompletionCosts(const C& costs, const PairingPlan& plan, const Faults& faults)
      : costs_(&costs), n_(costs.size()), plan_(&plan) {
    for (int k = 0; k < 2; ++k) {
      for (int t = 0; t < 2; ++t) {
        sign_[k][t] = (faults.flip_scheme == plan.scheme_id &&
                       faults.flip_template == plan.terms[k][t].template_index)
                          ? -1
                          : 1;
      }
    }
  }

  void fix(int a1, int a2) {
    const std::array<int, 2> a = {a1, a2};
    for (int k = 0; k < 2; ++k) {
      for (int t = 0; t < 2; ++t) {
        const auto& term = plan_->terms[k][t];
        const int p = a[term.a_index];
        a_node_[k][t] = term.a_primed ? succ(p, n_) : p;
      }
    }
  }

  T operator()(int k, int b) const {
    const int b_next = succ(b, n_);
    T v = (*costs_)(b, b_next);
    for (int t = 0; t < 2; ++t) {
      const int u = plan_->terms[k][t].b_primed ? b_next : b;
      const T c = (*costs_)(u, a_node_[k][t]);
      v = sign_[k][t] > 0 ? v - c : v + c;
    }
    return v;
  }

 private:
  const C* costs_;
  int n_;
  const PairingPlan* plan_;
  std::array<std::array<int, 2>, 2> a_node_{};
  std::array<std::array<int, 2>, 2> sign_{};
};

// Running-maximum arrays for one (a1, a2), indexed by absolute position.
template <class T>
struct CompletionTables {
  std::vector<T> v1, v2;
  std::vector<int> best_v1, best_v2;

  explicit CompletionTables(int n) : v1(n), v2(n), best_v1(n), best_v2(n) {}
};

template <CostAccess C>
std::optional<Completion<typename C::value_type>> best_completion(
    int a1, int a2, const PairingPlan& plan, CompletionCosts<C>& tilde,
    CompletionTables<typename C::value_type>& tables, int n, const Faults& faults = {},
    long long* evaluated = nullptr) {
  const CompletionRanges r = completion_ranges(plan.pattern, a1, a2, n);
  if (r.empty()) return std::nullopt;
  tilde.fix(a1, a2);
  auto& [v1, v2, best_v1, best_v2] = tables;

  v1[r.min1] = tilde(0, r.min1);
  best_v1[r.min1] = r.min1;
  for (int j = r.min1 + 1; j <= r.max1; ++j) {
    const auto here = tilde(0, j);
    if (!faults.deberg_v1_drop_carry && !(here > v1[j - 1])) {
      v1[j] = v1[j - 1];
      best_v1[j] = best_v1[j - 1];
    } else {
      v1[j] = here;
      best_v1[j] = j;
    }
  }
  const int lag = faults.deberg_coupling_off_by_one ? 1 : 2;
  auto coupled = [&](int j) { return std::min(j - lag, r.max1); };

  v2[r.min2] = tilde(1, r.min2) + v1[coupled(r.min2)];
  best_v2[r.min2] = r.min2;
  for (int j = r.min2 + 1; j <= r.max2; ++j) {
    const auto here = tilde(1, j) + v1[coupled(j)];
    if (!(here > v2[j - 1])) {
      v2[j] = v2[j - 1];
      best_v2[j] = best_v2[j - 1];
    } else {
      v2[j] = here;
      best_v2[j] = j;
    }
  }
  if (evaluated) *evaluated += (r.max1 - r.min1 + 1) + (r.max2 - r.min2 + 1);

  Completion<typename C::value_type> out;
  out.contribution = v2[r.max2];
  out.b2 = best_v2[r.max2];
  out.b1 = best_v1[coupled(out.b2)];
  return out;
}

inline Selection plan_selection(const PairingPlan& plan, int a1, int a2, int b1, int b2) {
  Selection s;
  s.i[plan.a_slots[0] - 1] = a1;
  s.i[plan.a_slots[1] - 1] = a2;
  s.i[plan.b_slots[0] - 1] = b1;
  s.i[plan.b_slots[1] - 1] = b2;
  return s;
}

// Gain of (plan's scheme, s) assembled from the a-edges and the two ~c
// terms, i.e. the quantity the dynamic program maximizes.
template <CostAccess C>
typename C::value_type decomposed_gain(const PairingPlan& plan, const Selection& s,
                                       const C& costs, const Faults& faults = {}) {
  const int n = costs.size();
  const int a1 = s[plan.a_slots[0]];
  const int a2 = s[plan.a_slots[1]];
  CompletionCosts<C> tilde(costs, plan, faults);
  tilde.fix(a1, a2);
  return costs(a1, succ(a1, n)) + costs(a2, succ(a2, n)) + tilde(0, s[plan.b_slots[0]]) +
         tilde(1, s[plan.b_slots[1]]);
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move_deberg(const C& costs,
                                                      std::span<const int> scheme_ids,
                                                      bool improving_only = true,
                                                      const Faults& faults = {}) {
  using T = typename C::value_type;
  const int n = costs.size();
  SearchResult<T> result;
  if (n < kMinSearchNodes) return result;
  CompletionTables<T> tables(n);

  for (int id : scheme_ids) {
    const PairingPlan plan = pairing_plan(scheme(id));
    CompletionCosts<C> tilde(costs, plan, faults);
    for (int a1 = 0; a1 < n; ++a1) {
      const auto [lo, hi] = a2_range(plan.pattern, a1, n);
      const T edge1 = costs(a1, succ(a1, n));
      for (int a2 = lo; a2 <= hi; ++a2) {
        const auto done = best_completion(a1, a2, plan, tilde, tables, n, faults, &result.evaluated);
        if (!done) continue;
        const Move<T> m{id, plan_selection(plan, a1, a2, done->b1, done->b2),
                        edge1 + costs(a2, succ(a2, n)) + done->contribution};
        if (improving_only && !(m.gain > T{})) continue;
        if (!result.best || better_move(m, *result.best)) result.best = m;
      }
    }
  }
  return result;
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move_deberg(const C& costs, bool improving_only = true,
                                                      const Faults& faults = {}) {
  const auto ids = all_scheme_ids();
  return best_move_deberg(costs, std::span<const int>(ids), improving_only, faults);
}

}  // namespace fouropt
