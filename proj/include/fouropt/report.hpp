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

// Run reports and the scheme catalog as JSON.
//
// A report is one JSON object on one line. Field names are frozen under
// the schema tag "fouropt.run_report/1"; see README.md.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fouropt/deberg.hpp"
#include "fouropt/driver.hpp"
#include "fouropt/symmetry.hpp"

namespace fouropt {

inline constexpr const char* kReportSchema = "fouropt.run_report/1";
inline constexpr const char* kVersion = "0.1.0";

struct RunReport {
  std::string schema = kReportSchema;
  std::string version = kVersion;
  std::string instance;
  int n = 0;
  std::string engine;
  std::uint64_t seed = 0;
  Cost initial_length = 0;
  Cost final_length = 0;
  int iterations = 0;
  std::vector<Cost> gains;
  std::vector<double> search_seconds;
  std::vector<int> tour;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(RunReport, schema, version, instance, n, engine, seed,
                                   initial_length, final_length, iterations, gains,
                                   search_seconds, tour)

inline RunReport make_report(const std::string& instance, Engine engine, std::uint64_t seed,
                             const LocalSearchResult<Cost>& run) {
  RunReport r;
  r.instance = instance;
  r.n = run.tour.size();
  r.engine = to_string(engine);
  r.seed = seed;
  r.initial_length = run.stats.initial_length;
  r.final_length = run.stats.final_length;
  r.iterations = run.stats.iterations;
  r.gains = run.stats.gains;
  r.search_seconds = run.stats.search_seconds;
  r.tour.assign(run.tour.order().begin(), run.tour.order().end());
  return r;
}

inline std::string emit_report(const RunReport& r) { return nlohmann::json(r).dump() + "\n"; }

// Throws std::runtime_error on a foreign schema tag.
inline RunReport parse_report(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  if (j.at("schema").get<std::string>() != kReportSchema) {
    throw std::runtime_error("unsupported report schema: " + j.at("schema").get<std::string>());
  }
  return j.get<RunReport>();
}

inline nlohmann::json template_json(const EdgeTemplate& e) {
  return {to_string(e.a), to_string(e.b)};
}

// Catalog rows: id, signed permutation, orbit, representative flag,
// inserted edge templates, de Berg pairing.
inline nlohmann::json scheme_catalog_json() {
  const auto orbits = orbit_partition();
  const auto index = orbit_index();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : pure_schemes()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : inserted_edge_templates(r)) edges.push_back(template_json(e));
    const int orbit = index.at(r.id);
    const auto plan = pairing_plan(r);
    rows.push_back({{"id", r.id},
                    {"scheme", to_string(r.perm)},
                    {"orbit", orbit},
                    {"representative", orbits[orbit - 1].representative == r.id},
                    {"inserted", edges},
                    {"a_slots", plan.a_slots},
                    {"pattern", to_string(plan.pattern)}});
  }
  return rows;
}

inline nlohmann::json orbit_table_json() {
  nlohmann::json rows = nlohmann::json::array();
  int k = 0;
  for (const auto& o : orbit_partition()) {
    rows.push_back({{"orbit", ++k},
                    {"size", o.members.size()},
                    {"representative", o.representative},
                    {"members", o.members}});
  }
  return rows;
}

}  // namespace fouropt
