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

// Best-improving local search over true 4-opt moves.

#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "fouropt/deberg.hpp"
#include "fouropt/glover.hpp"
#include "fouropt/oracle.hpp"

namespace fouropt {

enum class Engine {
  kBrute,
  kDeberg,
  kGlover,  // r10, r16, r25 only
  kHybrid,  // Glover for r10, r16, r25; de Berg for the other 22
};

inline const char* to_string(Engine e) {
  switch (e) {
    case Engine::kBrute: return "brute";
    case Engine::kDeberg: return "deberg";
    case Engine::kGlover: return "glover";
    case Engine::kHybrid: return "hybrid";
  }
  return "?";
}

inline Engine parse_engine(const std::string& name) {
  if (name == "brute") return Engine::kBrute;
  if (name == "deberg") return Engine::kDeberg;
  if (name == "glover") return Engine::kGlover;
  if (name == "hybrid" || name == "glover_restricted_plus_deberg") return Engine::kHybrid;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

// Scheme ids an engine searches.
inline std::vector<int> engine_schemes(Engine e) {
  if (e == Engine::kGlover) return {kGloverSchemes.begin(), kGloverSchemes.end()};
  return all_scheme_ids();
}

template <CostAccess C>
SearchResult<typename C::value_type> best_move(const C& costs, Engine engine,
                                               bool improving_only = true) {
  switch (engine) {
    case Engine::kBrute: return best_move_brute(costs, improving_only);
    case Engine::kDeberg: return best_move_deberg(costs, improving_only);
    case Engine::kGlover: return best_move_glover(costs, improving_only);
    case Engine::kHybrid: {
      std::vector<int> rest;
      for (int id : all_scheme_ids()) {
        if (id != 10 && id != 16 && id != 25) rest.push_back(id);
      }
      auto result = best_move_glover(costs, improving_only);
      merge_into(result, best_move_deberg(costs, std::span<const int>(rest), improving_only));
      return result;
    }
  }
  throw std::invalid_argument("best_move: bad engine");
}

template <class T>
struct RunStats {
  int iterations = 0;
  std::vector<T> gains;
  T initial_length{};
  T final_length{};
  std::vector<double> search_seconds;  // one entry per engine call
};

template <class T>
struct LocalSearchResult {
  Tour tour;
  RunStats<T> stats;
};

// Repeatedly applies the engine's best improving move until none is left
// or `max_iters` moves were made. Each engine call sees the current tour
// relabeled as 0 -> 1 -> ... -> n-1.
template <CostAccess C>
LocalSearchResult<typename C::value_type> local_search(Tour tour, const C& costs, Engine engine,
                                                       std::optional<int> max_iters = {}) {
  using T = typename C::value_type;
  if (costs.size() < kMinSearchNodes) {
    throw std::invalid_argument("local_search: need at least 8 nodes, got " +
                                std::to_string(costs.size()));
  }
  if (tour.size() != costs.size()) {
    throw std::invalid_argument("local_search: tour and matrix sizes differ");
  }
  RunStats<T> stats;
  stats.initial_length = tour_length(tour, costs);
  // Floating costs stop on negligible gains.
  T threshold{};
  if constexpr (std::is_floating_point_v<T>) threshold = T(1e-9) * stats.initial_length;

  while (!max_iters || stats.iterations < *max_iters) {
    const TourOrderView<C> view(costs, tour.order());
    const auto start = std::chrono::steady_clock::now();
    const auto result = best_move(view, engine, true);
    stats.search_seconds.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    if (!result.best || !(result.best->gain > threshold)) break;
    tour = apply_move(tour, scheme(result.best->scheme_id), result.best->selection);
    stats.gains.push_back(result.best->gain);
    ++stats.iterations;
  }
  stats.final_length = tour_length(tour, costs);
  return {std::move(tour), std::move(stats)};
}

}  // namespace fouropt
