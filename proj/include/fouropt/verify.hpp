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

// Self-test that checks every engine against the exhaustive oracle.
//
// Checks, in order: the scheme catalog against the purity filter; the
// group and action laws of the label map; the orbit partition against the
// known seven orbits; the de Berg gain decomposition on every selection;
// and per-scheme plus joint gain equality of de Berg and Glover against
// brute force on seeded random matrices. Returned moves are re-evaluated
// from scratch.

#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "fouropt/deberg.hpp"
#include "fouropt/faults.hpp"
#include "fouropt/glover.hpp"
#include "fouropt/instance.hpp"
#include "fouropt/oracle.hpp"
#include "fouropt/symmetry.hpp"

namespace fouropt {

struct VerifyOptions {
  int n = 12;
  int seeds = 5;
  std::uint64_t base_seed = 0;
  Cost max_cost = 1000;
  Faults faults;
};

struct VerifyReport {
  long long checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// The seven orbits as listed with the catalog numbering.
inline const std::vector<std::vector<int>>& known_orbits() {
  static const std::vector<std::vector<int>> orbits = {
      {1, 22, 23, 24}, {2, 21}, {3, 7, 13, 17}, {4, 6, 11, 19},
      {5, 8, 9, 12, 14, 15, 18, 20}, {10, 16}, {25},
  };
  return orbits;
}

namespace detail {

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(&report) {}

  void expect(bool condition, const std::string& what) {
    ++report_->checks;
    if (!condition && report_->failures.size() < kMaxFailures) report_->failures.push_back(what);
    if (!condition && report_->failures.size() == kMaxFailures) {
      report_->failures.push_back("(further failures suppressed)");
    }
  }

  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }

 private:
  static constexpr std::size_t kMaxFailures = 50;
  VerifyReport* report_;
};

inline void check_catalog(Checker& check) {
  std::set<SignedPerm> pure;
  for (const auto& p : all_signed_permutations()) {
    if (is_pure(p)) pure.insert(p);
  }
  std::set<SignedPerm> catalog;
  for (const auto& r : pure_schemes()) catalog.insert(r.perm);
  check.expect(pure.size() == 25, "purity filter keeps " + std::to_string(pure.size()) + " schemes");
  check.expect(pure == catalog, "catalog differs from the purity filter");
}

inline void check_group(Checker& check, const LabelMapTable& table) {
  const auto elements = group_elements();
  std::vector<Label> labels;
  for (int s = 1; s <= 4; ++s) labels.push_back({s, false}), labels.push_back({s, true});

  for (auto g : elements) {
    std::set<Label> image;
    for (auto l : labels) image.insert(apply_label_map(g, l, table));
    check.expect(image.size() == 8, "label map of " + to_string(g) + " is not a bijection");
    for (auto h : elements) {
      const auto gh = compose(g, h);
      for (auto l : labels) {
        check.expect(apply_label_map(gh, l, table) ==
                         apply_label_map(g, apply_label_map(h, l, table), table),
                     "label map breaks composition at " + to_string(g) + "*" + to_string(h));
      }
    }
  }
  // Swapped primes must agree with the drawing: psi fixes the r16 set.
  check.guarded("psi on r16", [&] {
    check.expect(act_on_scheme(kPsi, scheme(16), table).id == 16, "psi does not fix r16");
  });

  check.guarded("action law", [&] {
    for (const auto& r : pure_schemes()) {
      std::set<int> images;
      for (auto g : elements) {
        images.insert(act_on_scheme(g, r, table).id);
        for (auto h : elements) {
          check.expect(act_on_scheme(compose(g, h), r, table) ==
                           act_on_scheme(g, act_on_scheme(h, r, table), table),
                       "action law fails for r" + std::to_string(r.id));
        }
      }
    }
  });
  check.guarded("orbit partition", [&] {
    const auto orbits = orbit_partition(table);
    check.expect(orbits.size() == known_orbits().size(),
                 "found " + std::to_string(orbits.size()) + " orbits, expected 7");
    for (std::size_t k = 0; k < std::min(orbits.size(), known_orbits().size()); ++k) {
      auto want = known_orbits()[k];
      std::sort(want.begin(), want.end());
      check.expect(orbits[k].members == want, "orbit " + std::to_string(k + 1) + " differs");
    }
  });
}

template <CostAccess C>
void check_decomposition(Checker& check, const C& costs, const Faults& faults) {
  for (const auto& r : pure_schemes()) {
    const PairingPlan plan = pairing_plan(r);
    const ReinsertionSet set = inserted_edge_templates(r);
    for_each_complete_selection(costs.size(), [&](const Selection& s) {
      check.expect(decomposed_gain(plan, s, costs, faults) == gain(set, s, costs),
                   "de Berg decomposition differs for r" + std::to_string(r.id) + " at " +
                       to_string(s));
    });
  }
}

// Compares an engine result with the oracle and re-evaluates its move.
template <CostAccess C>
void check_against(Checker& check, const std::string& label, const C& costs,
                   const SearchResult<typename C::value_type>& engine,
                   const SearchResult<typename C::value_type>& oracle) {
  check.expect(engine.best.has_value() == oracle.best.has_value(), label + ": presence differs");
  if (!engine.best || !oracle.best) return;
  check.expect(engine.best->gain == oracle.best->gain,
               label + ": gain " + std::to_string(engine.best->gain) + " vs oracle " +
                   std::to_string(oracle.best->gain));
  const Move<typename C::value_type>& m = *engine.best;
  const bool complete = is_complete_selection(m.selection, costs.size());
  check.expect(complete, label + ": returned selection " + to_string(m.selection) + " is not complete");
  if (complete) {
    check.expect(gain(scheme(m.scheme_id), m.selection, costs) == m.gain,
                 label + ": returned move does not re-evaluate to its gain");
  }
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  detail::Checker check(report);
  const Faults& faults = options.faults;

  detail::check_catalog(check);
  detail::check_group(check, faults.label_map);
  if (options.n < kMinSearchNodes) {
    check.expect(false, "verification needs n >= 8");
    return report;
  }

  check.guarded("decomposition", [&] {
    const auto costs = generate_random(RandomMatrixSpec{options.n, options.max_cost, options.base_seed});
    detail::check_decomposition(check, costs, faults);
  });

  for (int k = 0; k < options.seeds; ++k) {
    const std::uint64_t seed = options.base_seed + static_cast<std::uint64_t>(k);
    const auto costs = generate_random(RandomMatrixSpec{options.n, options.max_cost, seed});
    const std::string tag = "n=" + std::to_string(options.n) + " seed=" + std::to_string(seed);
    check.guarded(tag, [&] {
      for (int id : all_scheme_ids()) {
        const int one[] = {id};
        const std::span<const int> ids(one);
        const auto oracle = best_move_brute(costs, ids, false);
        detail::check_against(check, tag + " deberg r" + std::to_string(id), costs,
                              best_move_deberg(costs, ids, false, faults), oracle);
        if (id == 10 || id == 16 || id == 25) {
          detail::check_against(check, tag + " glover r" + std::to_string(id), costs,
                                best_move_glover(costs, ids, false, faults), oracle);
        }
      }
      detail::check_against(check, tag + " deberg all", costs, best_move_deberg(costs, false, faults),
                            best_move_brute(costs, false));
      const std::span<const int> glover_ids(kGloverSchemes);
      detail::check_against(check, tag + " glover all", costs, best_move_glover(costs, false, faults),
                            best_move_brute(costs, glover_ids, false));
    });
  }
  return report;
}

}  // namespace fouropt
