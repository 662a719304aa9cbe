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

// fouropt: scheme catalog, local search, oracle verification, benchmarks.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fouropt/fouropt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct LoadedInstance {
  std::string name;
  fouropt::CostMatrix<fouropt::Cost> costs;
};

// "<path>", "random-matrix:N[:MAX]" or "random-euclid:N[:BOX]".
LoadedInstance load_instance(const std::string& spec, std::uint64_t seed) {
  auto parse_random = [&](const std::string& prefix, long long fallback) {
    std::vector<long long> parts;
    std::stringstream in(spec.substr(prefix.size()));
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(std::stoll(item));
    if (parts.empty() || parts.size() > 2) {
      throw std::invalid_argument("expected " + prefix + "N[:PARAM]");
    }
    return std::pair<int, long long>(static_cast<int>(parts[0]),
                                     parts.size() == 2 ? parts[1] : fallback);
  };
  if (spec.rfind("random-matrix:", 0) == 0) {
    auto [n, max_cost] = parse_random("random-matrix:", 1000);
    return {spec, fouropt::generate_random(fouropt::RandomMatrixSpec{n, max_cost, seed})};
  }
  if (spec.rfind("random-euclid:", 0) == 0) {
    auto [n, box] = parse_random("random-euclid:", 1000000);
    return {spec, fouropt::generate_random(fouropt::RandomEuclideanSpec{n, box, seed})};
  }
  auto inst = fouropt::read_tsplib_file(spec);
  return {inst.name.empty() ? spec : inst.name, std::move(inst.costs)};
}

std::string join_templates(const fouropt::ReinsertionSet& set) {
  std::string out;
  for (const auto& e : set) {
    if (!out.empty()) out += " ";
    out += "{" + fouropt::to_string(e.a) + "," + fouropt::to_string(e.b) + "}";
  }
  return out;
}

int cmd_schemes(bool json) {
  if (json) {
    std::cout << fouropt::scheme_catalog_json().dump(2) << "\n";
    return kExitOk;
  }
  const auto orbits = fouropt::orbit_partition();
  const auto index = fouropt::orbit_index();
  std::cout << "id  scheme        orbit  rep  inserted\n";
  for (const auto& r : fouropt::pure_schemes()) {
    const int o = index.at(r.id);
    std::cout << std::left << std::setw(4) << r.id << std::setw(14) << fouropt::to_string(r.perm)
              << std::setw(7) << o << std::setw(5)
              << (orbits[o - 1].representative == r.id ? "*" : "")
              << join_templates(fouropt::inserted_edge_templates(r)) << "\n";
  }
  return kExitOk;
}

int cmd_orbits(bool json) {
  if (json) {
    std::cout << fouropt::orbit_table_json().dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "orbit  size  representative  members\n";
  int k = 0;
  for (const auto& o : fouropt::orbit_partition()) {
    std::string members;
    for (int id : o.members) members += (members.empty() ? "r" : " r") + std::to_string(id);
    std::cout << std::left << std::setw(7) << ++k << std::setw(6) << o.members.size() << std::setw(16)
              << ("r" + std::to_string(o.representative)) << members << "\n";
  }
  return kExitOk;
}

struct SolveArgs {
  std::string instance;
  std::string engine = "deberg";
  std::uint64_t seed = 0;
  std::optional<int> max_iters;
  std::string out;
};

int cmd_solve(const SolveArgs& args) {
  const auto engine = fouropt::parse_engine(args.engine);
  const auto inst = load_instance(args.instance, args.seed);
  const auto run = fouropt::local_search(fouropt::Tour::canonical(inst.costs.size()), inst.costs,
                                         engine, args.max_iters);
  const auto report = fouropt::make_report(inst.name, engine, args.seed, run);
  std::cout << "instance " << report.instance << " n=" << report.n << " engine=" << report.engine
            << "\ninitial " << report.initial_length << "\nfinal " << report.final_length
            << "\niterations " << report.iterations << "\n";
  if (!args.out.empty()) {
    std::ofstream file(args.out);
    if (!file) throw std::invalid_argument("cannot write " + args.out);
    file << fouropt::emit_report(report);
  }
  return kExitOk;
}

struct VerifyArgs {
  int n = 12;
  int seeds = 5;
  std::uint64_t seed = 0;
  std::string mutate;
  bool list = false;
};

int cmd_verify(const VerifyArgs& args) {
  const auto catalog = fouropt::single_fault_catalog();
  if (args.list) {
    for (const auto& [name, faults] : catalog) std::cout << name << "\n";
    return kExitOk;
  }
  fouropt::VerifyOptions options;
  options.n = args.n;
  options.seeds = args.seeds;
  options.base_seed = args.seed;
  if (!args.mutate.empty()) {
    bool found = false;
    for (const auto& [name, faults] : catalog) {
      if (name == args.mutate) {
        options.faults = faults;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown mutation '" + args.mutate + "' (see --list-mutations)");
  }
  const auto report = fouropt::run_verification(options);
  for (const auto& f : report.failures) std::cout << "FAIL " << f << "\n";
  std::cout << (report.ok() ? "OK" : "MISMATCH") << " checks=" << report.checks
            << " failures=" << report.failures.size() << "\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

struct BenchArgs {
  std::string engine = "deberg";
  std::vector<int> sizes;
  std::uint64_t seed = 0;
  double min_seconds = 0.2;
};

int cmd_bench(const BenchArgs& args) {
  const auto engine = fouropt::parse_engine(args.engine);
  const auto points = fouropt::bench_engine(engine, args.sizes, args.seed, args.min_seconds);
  std::cout << "n       seconds       reps  evaluated\n";
  for (const auto& p : points) {
    std::cout << std::left << std::setw(8) << p.n << std::setw(14) << std::scientific
              << std::setprecision(4) << p.seconds << std::defaultfloat << std::setw(6)
              << p.repetitions << p.evaluated << "\n";
  }
  if (points.size() >= 2) {
    std::cout << "loglog_slope " << std::fixed << std::setprecision(3)
              << fouropt::loglog_slope(points) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"True 4-opt move search for the symmetric TSP"};
  app.require_subcommand(1);

  bool schemes_json = false, orbits_json = false;
  auto* schemes = app.add_subcommand("schemes", "Print the 25 pure reinsertion schemes");
  schemes->add_flag("--json", schemes_json, "Emit JSON");
  auto* orbits = app.add_subcommand("orbits", "Print the orbit table");
  orbits->add_flag("--json", orbits_json, "Emit JSON");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Run best-improving 4-opt local search");
  solve->add_option("--instance", solve_args.instance,
                    "TSPLIB path, random-matrix:N[:MAX] or random-euclid:N[:BOX]")
      ->required();
  solve->add_option("--engine", solve_args.engine, "brute|deberg|glover|hybrid");
  solve->add_option("--seed", solve_args.seed, "Seed for random instances");
  solve->add_option("--max-iters", solve_args.max_iters, "Stop after this many moves");
  solve->add_option("--out", solve_args.out, "Write the run report here");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check all engines against the exhaustive oracle");
  verify->add_option("--n", verify_args.n, "Instance size");
  verify->add_option("--seeds", verify_args.seeds, "Number of random instances");
  verify->add_option("--seed", verify_args.seed, "First seed");
  verify->add_option("--mutate", verify_args.mutate, "Inject a named defect");
  verify->add_flag("--list-mutations", verify_args.list, "List defect names");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time one best-move search per size");
  bench->add_option("--engine", bench_args.engine, "brute|deberg|glover|hybrid");
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated sizes")->delimiter(',')->required();
  bench->add_option("--seed", bench_args.seed, "Instance seed");
  bench->add_option("--min-seconds", bench_args.min_seconds, "Minimum timing window per size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*schemes) return cmd_schemes(schemes_json);
    if (*orbits) return cmd_orbits(orbits_json);
    if (*solve) return cmd_solve(solve_args);
    if (*verify) return cmd_verify(verify_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const fouropt::TsplibError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
