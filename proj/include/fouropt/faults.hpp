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

// Deliberate defects that can be switched on in the engines. Only the
// verification suite uses these: it must report a failure for each one.

#pragma once

#include <string>
#include <vector>

#include "fouropt/symmetry.hpp"

namespace fouropt {

struct Faults {
  // de Berg: negate the inserted-edge term `flip_template` (0..3, in plan
  // order) of scheme `flip_scheme` inside the b-slot contributions.
  int flip_scheme = 0;
  int flip_template = -1;
  // de Berg: V1[j] ignores V1[j-1].
  bool deberg_v1_drop_carry = false;
  // de Berg: V2 couples with V1[min(j-1, max1)] instead of j-2.
  bool deberg_coupling_off_by_one = false;
  // Glover: A[i,j] ignores A[i-1,j].
  bool glover_a_drop_carry = false;
  // Glover: B[i,j] ignores B[i,j-1].
  bool glover_b_drop_carry = false;
  // Glover: B[i,j] reads A[i-2,j-1] instead of A[i-2,j-2].
  bool glover_b_off_by_one = false;
  LabelMapTable label_map = kLabelMap;

  bool any() const { return *this != Faults{}; }
  friend bool operator==(const Faults&, const Faults&) = default;
};

// Every single-defect configuration the self-test is expected to catch.
inline std::vector<std::pair<std::string, Faults>> single_fault_catalog() {
  std::vector<std::pair<std::string, Faults>> out;
  for (int id = 1; id <= kNumPureSchemes; ++id) {
    for (int t = 0; t < 4; ++t) {
      Faults f;
      f.flip_scheme = id;
      f.flip_template = t;
      out.emplace_back("flip-sign r" + std::to_string(id) + " term " + std::to_string(t), f);
    }
  }
  auto add = [&](const std::string& name, auto mutate) {
    Faults f;
    mutate(f);
    out.emplace_back(name, f);
  };
  add("deberg-v1-drop-carry", [](Faults& f) { f.deberg_v1_drop_carry = true; });
  add("deberg-coupling-off-by-one", [](Faults& f) { f.deberg_coupling_off_by_one = true; });
  add("glover-a-drop-carry", [](Faults& f) { f.glover_a_drop_carry = true; });
  add("glover-b-drop-carry", [](Faults& f) { f.glover_b_drop_carry = true; });
  add("glover-b-off-by-one", [](Faults& f) { f.glover_b_off_by_one = true; });
  for (int s = 0; s < 4; ++s) {
    for (int v = 1; v <= 4; ++v) {
      if (v != kLabelMap.rho[s]) {
        add("label-map rho[" + std::to_string(s + 1) + "]=" + std::to_string(v),
            [&](Faults& f) { f.label_map.rho[s] = v; });
      }
      if (v != kLabelMap.psi[s]) {
        add("label-map psi[" + std::to_string(s + 1) + "]=" + std::to_string(v),
            [&](Faults& f) { f.label_map.psi[s] = v; });
      }
    }
  }
  add("label-map reflection keeps primes",
      [](Faults& f) { f.label_map.reflection_swaps_primes = false; });
  return out;
}

}  // namespace fouropt
