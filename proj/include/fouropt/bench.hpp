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

// Wall-clock timing of single best-move searches and log-log slope fits.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fouropt/driver.hpp"
#include "fouropt/instance.hpp"

namespace fouropt {

struct BenchPoint {
  int n = 0;
  double seconds = 0;  // per best-move search
  int repetitions = 0;
  long long evaluated = 0;
};

// Repeats the search until `min_seconds` have elapsed, then keeps the
// fastest of `rounds` such batches.
template <CostAccess C>
BenchPoint time_best_move(const C& costs, Engine engine, double min_seconds = 0.2, int rounds = 3) {
  using clock = std::chrono::steady_clock;
  BenchPoint point;
  point.n = costs.size();
  point.seconds = INFINITY;
  for (int round = 0; round < rounds; ++round) {
    int reps = 0;
    const auto start = clock::now();
    double elapsed = 0;
    do {
      const auto result = best_move(costs, engine, false);
      point.evaluated = result.evaluated;
      ++reps;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < min_seconds);
    if (elapsed / reps < point.seconds) {
      point.seconds = elapsed / reps;
      point.repetitions = reps;
    }
  }
  return point;
}

inline std::vector<BenchPoint> bench_engine(Engine engine, std::span<const int> sizes,
                                            std::uint64_t seed = 0, double min_seconds = 0.2,
                                            int rounds = 3) {
  std::vector<BenchPoint> out;
  for (int n : sizes) {
    const auto costs = generate_random(RandomEuclideanSpec{n, 1000000, seed});
    out.push_back(time_best_move(costs, engine, min_seconds, rounds));
  }
  return out;
}

// Least-squares slope of log(seconds) against log(n).
inline double loglog_slope(std::span<const BenchPoint> points) {
  if (points.size() < 2) throw std::invalid_argument("loglog_slope: need two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(points.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace fouropt
