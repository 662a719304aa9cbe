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

// Runs 4-opt local search with each engine on a small random instance.

#include <iostream>

#include "fouropt/fouropt.hpp"

int main() {
  const auto costs = fouropt::generate_random(fouropt::RandomEuclideanSpec{60, 10000, 7});
  const auto start = fouropt::Tour::canonical(costs.size());
  for (auto engine : {fouropt::Engine::kGlover, fouropt::Engine::kDeberg, fouropt::Engine::kHybrid}) {
    const auto run = fouropt::local_search(start, costs, engine);
    std::cout << fouropt::to_string(engine) << ": " << run.stats.initial_length << " -> "
              << run.stats.final_length << " in " << run.stats.iterations << " moves\n";
  }
  return 0;
}
