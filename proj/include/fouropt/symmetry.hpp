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

// The octic (dihedral order-8) group acting on the circular drawing of a
// 4-opt move, and the orbits it induces on the 25 pure schemes.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fouropt/schemes.hpp"

namespace fouropt {

// psi^reflect * rho^rot, with rho the quarter turn and psi the reflection
// about the horizontal axis.
struct GroupElement {
  bool reflect = false;
  int rot = 0;  // 0..3

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

inline std::string to_string(GroupElement g) {
  std::string s = g.reflect ? "psi" : "";
  if (g.rot == 0) return g.reflect ? s : "id";
  return s + (g.reflect ? "*" : "") + "rho" + (g.rot > 1 ? "^" + std::to_string(g.rot) : "");
}

inline constexpr GroupElement kIdentity{false, 0};
inline constexpr GroupElement kRho{false, 1};
inline constexpr GroupElement kPsi{true, 0};

inline std::array<GroupElement, 8> group_elements() {
  std::array<GroupElement, 8> out;
  for (int k = 0; k < 8; ++k) out[k] = {k >= 4, k % 4};
  return out;
}

// (g*h)(x) = g(h(x)). Uses rho^b psi = psi rho^(-b).
inline GroupElement compose(GroupElement g, GroupElement h) {
  if (h.reflect) return {!g.reflect, ((h.rot - g.rot) % 4 + 4) % 4};
  return {g.reflect, (g.rot + h.rot) % 4};
}

// Slot images of the two generators. Swappable so the verification suite
// can check that a corrupted table is caught.
struct LabelMapTable {
  std::array<int, 4> rho = {2, 3, 4, 1};  // slot s -> rho[s-1]
  std::array<int, 4> psi = {3, 2, 1, 4};
  bool reflection_swaps_primes = true;

  friend bool operator==(const LabelMapTable&, const LabelMapTable&) = default;
};

inline const LabelMapTable kLabelMap{};

inline int slot_image(GroupElement g, int slot, const LabelMapTable& table = kLabelMap) {
  for (int k = 0; k < g.rot; ++k) slot = table.rho[slot - 1];
  if (g.reflect) slot = table.psi[slot - 1];
  return slot;
}

// Rotations carry x -> phi(x), x' -> phi(x)'; reflections also flip primes.
inline Label apply_label_map(GroupElement g, Label l, const LabelMapTable& table = kLabelMap) {
  const bool flip = g.reflect && table.reflection_swaps_primes;
  return {slot_image(g, l.slot, table), l.primed != flip};
}

inline ReinsertionSet act_on_set(GroupElement g, const ReinsertionSet& set,
                                 const LabelMapTable& table = kLabelMap) {
  ReinsertionSet out;
  for (int k = 0; k < 4; ++k) {
    out[k] = {apply_label_map(g, set[k].a, table), apply_label_map(g, set[k].b, table)};
  }
  return out;
}

// The scheme whose reinsertion set is g applied to r's set. Throws
// std::logic_error if the image is not a pure reinsertion set, which can
// only happen with a corrupted label table.
inline const Scheme& act_on_scheme(GroupElement g, const Scheme& r,
                                   const LabelMapTable& table = kLabelMap) {
  const auto image = signed_perm_of(act_on_set(g, inserted_edge_templates(r), table));
  if (!image) {
    throw std::logic_error("label map sends r" + std::to_string(r.id) + " under " + to_string(g) +
                           " outside the pure schemes");
  }
  return scheme(*scheme_id_of(*image));
}

struct Orbit {
  int representative = 0;    // smallest scheme id in the orbit
  std::vector<int> members;  // ascending scheme ids

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

inline Orbit orbit_of(const Scheme& r, const LabelMapTable& table = kLabelMap) {
  std::set<int> ids;
  for (auto g : group_elements()) ids.insert(act_on_scheme(g, r, table).id);
  Orbit o;
  o.members.assign(ids.begin(), ids.end());
  o.representative = o.members.front();
  return o;
}

// Orbits ordered by representative id.
inline std::vector<Orbit> orbit_partition(const LabelMapTable& table = kLabelMap) {
  std::vector<Orbit> orbits;
  std::vector<bool> covered(kNumPureSchemes + 1, false);
  for (const auto& r : pure_schemes()) {
    if (covered[r.id]) continue;
    Orbit o = orbit_of(r, table);
    for (int id : o.members) covered[id] = true;
    orbits.push_back(std::move(o));
  }
  return orbits;
}

// Orbit index (1-based, in partition order) of every scheme id.
inline std::map<int, int> orbit_index(const LabelMapTable& table = kLabelMap) {
  std::map<int, int> index;
  const auto orbits = orbit_partition(table);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    for (int id : orbits[k].members) index[id] = static_cast<int>(k) + 1;
  }
  return index;
}

}  // namespace fouropt
