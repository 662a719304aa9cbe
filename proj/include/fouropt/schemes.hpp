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

// Pure reinsertion schemes for 4-opt moves on the canonical tour.
//
// Removing the edges {i_h, i_h+1} of a selection i1 < i2 < i3 < i4 cuts the
// tour into four segments:
//
//   seg1 = (i4+1 .. i1), seg2 = (i1+1 .. i2), seg3 = (i2+1 .. i3),
//   seg4 = (i3+1 .. i4).
//
// A scheme is a signed permutation of {2,3,4}: starting from seg1 walked
// forward, it lists the order in which the remaining segments are visited,
// with -s meaning segment s is walked backwards. Node i_s is written as the
// label s and node i_s+1 as the primed label s'.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fouropt/model.hpp"

namespace fouropt {

using SignedPerm = std::array<int, 3>;

struct Label {
  int slot = 1;  // 1..4
  bool primed = false;

  friend auto operator<=>(const Label&, const Label&) = default;
};

inline std::string to_string(Label l) { return std::to_string(l.slot) + (l.primed ? "'" : ""); }

struct EdgeTemplate {
  Label a;
  Label b;

  EdgeTemplate normalized() const { return b < a ? EdgeTemplate{b, a} : *this; }
  friend auto operator<=>(const EdgeTemplate&, const EdgeTemplate&) = default;
};

using ReinsertionSet = std::array<EdgeTemplate, 4>;

// Canonical form: endpoints ordered within each edge, edges sorted.
inline ReinsertionSet normalized(ReinsertionSet set) {
  for (auto& e : set) e = e.normalized();
  std::sort(set.begin(), set.end());
  return set;
}

struct Scheme {
  int id = 0;  // 1..25
  SignedPerm perm{};

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

inline std::string to_string(const SignedPerm& p) {
  std::string s = "<";
  for (int k = 0; k < 3; ++k) {
    if (k) s += ",";
    s += (p[k] > 0 ? "+" : "-") + std::to_string(std::abs(p[k]));
  }
  return s + ">";
}

inline constexpr int kNumPureSchemes = 25;

// The catalog, numbered r1..r25 by underlying permutation and signing.
inline const std::vector<Scheme>& pure_schemes() {
  static const std::vector<Scheme> catalog = {
      {1, {-2, -3, -4}},  {2, {-2, +3, -4}},  {3, {-2, -4, +3}},  {4, {-2, +4, -3}},
      {5, {-2, +4, +3}},  {6, {-3, +2, -4}},  {7, {+3, -2, -4}},  {8, {+3, +2, -4}},
      {9, {-3, -4, -2}},  {10, {-3, -4, +2}}, {11, {-3, +4, -2}}, {12, {-3, +4, +2}},
      {13, {+3, -4, -2}}, {14, {+3, -4, +2}}, {15, {-4, -2, -3}}, {16, {+4, -2, -3}},
      {17, {-4, -2, +3}}, {18, {+4, -2, +3}}, {19, {-4, +2, -3}}, {20, {+4, +2, -3}},
      {21, {-4, +3, -2}}, {22, {-4, +3, +2}}, {23, {+4, -3, +2}}, {24, {+4, +3, -2}},
      {25, {+4, +3, +2}},
  };
  return catalog;
}

inline const Scheme& scheme(int id) {
  if (id < 1 || id > kNumPureSchemes) {
    throw std::out_of_range("scheme id " + std::to_string(id) + " outside 1..25");
  }
  return pure_schemes()[id - 1];
}

inline std::vector<int> all_scheme_ids() {
  std::vector<int> ids(kNumPureSchemes);
  for (int k = 0; k < kNumPureSchemes; ++k) ids[k] = k + 1;
  return ids;
}

// All 48 signed permutations of {2,3,4}.
inline std::vector<SignedPerm> all_signed_permutations() {
  std::vector<SignedPerm> out;
  std::array<int, 3> perm = {2, 3, 4};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      SignedPerm p;
      for (int k = 0; k < 3; ++k) p[k] = (signs >> (2 - k) & 1) ? perm[k] : -perm[k];
      out.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// A signed permutation is pure iff no transition rejoins a removed edge:
// the walk is +1, p[0], p[1], p[2], +1 and "+t,+(t+1)" (cyclically, so "+4"
// before the closing "+1") or "-t,-(t-1)" would reuse the edge {i_t, i_t+1}.
inline bool is_pure(const SignedPerm& p) {
  const std::array<int, 5> walk = {+1, p[0], p[1], p[2], +1};
  for (int k = 0; k + 1 < 5; ++k) {
    const int x = walk[k];
    const int y = walk[k + 1];
    if (x > 0 && y > 0 && y == x % 4 + 1) return false;
    if (x < 0 && y < 0 && -y == -x - 1) return false;
  }
  return true;
}

inline std::optional<int> scheme_id_of(const SignedPerm& p) {
  for (const auto& s : pure_schemes()) {
    if (s.perm == p) return s.id;
  }
  return std::nullopt;
}

namespace detail {

inline Label first_of_segment(int s) { return {s == 1 ? 4 : s - 1, true}; }
inline Label last_of_segment(int s) { return {s, false}; }

}  // namespace detail

// Inserted edges by segment reassembly. Throws on a degenerate scheme.
inline ReinsertionSet inserted_edge_templates(const SignedPerm& p) {
  ReinsertionSet set;
  Label exit = detail::last_of_segment(1);
  for (int k = 0; k < 3; ++k) {
    const int s = std::abs(p[k]);
    const bool forward = p[k] > 0;
    const Label entry = forward ? detail::first_of_segment(s) : detail::last_of_segment(s);
    set[k] = {exit, entry};
    exit = forward ? detail::last_of_segment(s) : detail::first_of_segment(s);
  }
  set[3] = {exit, detail::first_of_segment(1)};
  for (const auto& e : set) {
    if (e.a.slot == e.b.slot) {
      throw std::invalid_argument("scheme " + to_string(p) + " is degenerate: it reinserts edge " +
                                  std::to_string(e.a.slot));
    }
  }
  return set;
}

inline ReinsertionSet inserted_edge_templates(const Scheme& r) {
  return inserted_edge_templates(r.perm);
}

// Inverse of inserted_edge_templates. Returns nullopt when the set does not
// describe a single Hamiltonian reconnection (labels repeated, subtours, or
// a removed edge put back).
inline std::optional<SignedPerm> signed_perm_of(const ReinsertionSet& set) {
  auto key = [](Label l) { return (l.slot - 1) * 2 + (l.primed ? 1 : 0); };
  std::array<int, 8> partner;
  partner.fill(-1);
  for (const auto& e : set) {
    if (e.a.slot < 1 || e.a.slot > 4 || e.b.slot < 1 || e.b.slot > 4) return std::nullopt;
    const int ka = key(e.a);
    const int kb = key(e.b);
    if (ka == kb || partner[ka] != -1 || partner[kb] != -1) return std::nullopt;
    partner[ka] = kb;
    partner[kb] = ka;
  }
  auto label_of = [](int k) { return Label{k / 2 + 1, (k & 1) != 0}; };

  SignedPerm p{};
  std::array<bool, 5> visited{};
  Label exit = detail::last_of_segment(1);
  for (int k = 0; k < 3; ++k) {
    const Label entry = label_of(partner[key(exit)]);
    int s = 0;
    bool forward = false;
    for (int t = 2; t <= 4; ++t) {
      if (entry == detail::first_of_segment(t)) { s = t; forward = true; }
      if (entry == detail::last_of_segment(t)) { s = t; forward = false; }
    }
    if (s == 0 || visited[s]) return std::nullopt;
    visited[s] = true;
    p[k] = forward ? s : -s;
    exit = forward ? detail::last_of_segment(s) : detail::first_of_segment(s);
  }
  if (label_of(partner[key(exit)]) != detail::first_of_segment(1)) return std::nullopt;
  if (!is_pure(p)) return std::nullopt;
  return p;
}

// Four cut positions on the canonical tour, strictly increasing.
struct Selection {
  std::array<int, 4> i{};

  int operator[](int slot) const { return i[slot - 1]; }  // 1-based slot
  friend auto operator<=>(const Selection&, const Selection&) = default;
};

inline std::string to_string(const Selection& s) {
  return "(" + std::to_string(s.i[0]) + "," + std::to_string(s.i[1]) + "," +
         std::to_string(s.i[2]) + "," + std::to_string(s.i[3]) + ")";
}

inline bool is_ordered_selection(const Selection& s, int n) {
  return 0 <= s.i[0] && s.i[0] < s.i[1] && s.i[1] < s.i[2] && s.i[2] < s.i[3] && s.i[3] < n;
}

// No two removed edges are consecutive, counting the wrap from i4 to i1.
inline bool is_complete_selection(const Selection& s, int n) {
  if (!is_ordered_selection(s, n)) return false;
  return s.i[1] - s.i[0] >= 2 && s.i[2] - s.i[1] >= 2 && s.i[3] - s.i[2] >= 2 &&
         s.i[0] + n - s.i[3] >= 2;
}

inline int node_of(Label l, const Selection& s, int n) {
  const int p = s[l.slot];
  return l.primed ? succ(p, n) : p;
}

inline std::array<std::pair<int, int>, 4> removed_edges(const Selection& s, int n) {
  std::array<std::pair<int, int>, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = {s.i[k], succ(s.i[k], n)};
  return out;
}

inline std::array<std::pair<int, int>, 4> inserted_edges(const ReinsertionSet& set,
                                                          const Selection& s, int n) {
  std::array<std::pair<int, int>, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = {node_of(set[k].a, s, n), node_of(set[k].b, s, n)};
  return out;
}

// c(removed) - c(inserted) for the move (r, s) on the canonical tour.
template <CostAccess C>
typename C::value_type gain(const ReinsertionSet& set, const Selection& s, const C& costs) {
  const int n = costs.size();
  typename C::value_type g{};
  for (auto [u, v] : removed_edges(s, n)) g += costs(u, v);
  for (auto [u, v] : inserted_edges(set, s, n)) g -= costs(u, v);
  return g;
}

template <CostAccess C>
typename C::value_type gain(const Scheme& r, const Selection& s, const C& costs) {
  return gain(inserted_edge_templates(r), s, costs);
}

// Rebuilds the tour after the move. Positions in `s` index tour order.
inline Tour apply_move(const Tour& tour, const SignedPerm& p, const Selection& s) {
  const int n = tour.size();
  if (!is_complete_selection(s, n)) {
    throw std::invalid_argument("apply_move: selection " + to_string(s) + " is not complete for n=" +
                                std::to_string(n));
  }
  // Segment t runs over positions [first[t], last[t]] cyclically.
  std::array<int, 5> first{}, last{};
  first[1] = succ(s.i[3], n);
  last[1] = s.i[0];
  for (int t = 2; t <= 4; ++t) {
    first[t] = s.i[t - 2] + 1;
    last[t] = s.i[t - 1];
  }
  std::vector<int> order;
  order.reserve(n);
  for (int q = first[1];; q = succ(q, n)) {
    order.push_back(tour[q]);
    if (q == last[1]) break;
  }
  for (int k = 0; k < 3; ++k) {
    const int t = std::abs(p[k]);
    if (p[k] > 0) {
      for (int q = first[t]; q <= last[t]; ++q) order.push_back(tour[q]);
    } else {
      for (int q = last[t]; q >= first[t]; --q) order.push_back(tour[q]);
    }
  }
  return Tour(std::move(order));
}

inline Tour apply_move(const Tour& tour, const Scheme& r, const Selection& s) {
  return apply_move(tour, r.perm, s);
}

// A scored move. Gain is c(removed) - c(inserted); improving iff > 0.
template <class T = Cost>
struct Move {
  int scheme_id = 0;
  Selection selection;
  T gain{};

  friend bool operator==(const Move&, const Move&) = default;
};

// True when `a` beats `b`: larger gain, then smaller scheme id, then the
// lexicographically smaller selection.
template <class T>
bool better_move(const Move<T>& a, const Move<T>& b) {
  if (a.gain != b.gain) return a.gain > b.gain;
  if (a.scheme_id != b.scheme_id) return a.scheme_id < b.scheme_id;
  return a.selection < b.selection;
}

template <class T = Cost>
struct SearchResult {
  std::optional<Move<T>> best;
  long long evaluated = 0;
};

// Keeps the better of `acc` and `candidate` and sums the work counters.
template <class T>
void merge_into(SearchResult<T>& acc, const SearchResult<T>& candidate) {
  acc.evaluated += candidate.evaluated;
  if (candidate.best && (!acc.best || better_move(*candidate.best, *acc.best))) {
    acc.best = candidate.best;
  }
}

}  // namespace fouropt
