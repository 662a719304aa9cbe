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

// Instance ingestion: a symmetric TSPLIB subset and seeded generators.
//
// Supported TSPLIB input: TYPE TSP with EDGE_WEIGHT_TYPE EUC_2D, or
// EXPLICIT with EDGE_WEIGHT_FORMAT FULL_MATRIX, UPPER_ROW or LOWER_DIAG_ROW.
// EUC_2D distances are rounded to the nearest integer, (int)(d + 0.5).
// Anything else is rejected with TsplibError naming the offending keyword.

#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fouropt/model.hpp"

namespace fouropt {

class TsplibError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TsplibInstance {
  std::string name;
  std::string comment;
  CostMatrix<Cost> costs;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline Cost nint(double x) { return static_cast<Cost>(x + 0.5); }

}  // namespace detail

inline TsplibInstance parse_tsplib_instance(const std::string& text) {
  TsplibInstance out;
  std::string type, weight_type, weight_format;
  int dimension = -1;
  std::vector<double> xs, ys;
  std::vector<Cost> weights;
  bool have_coords = false, have_weights = false;

  std::istringstream in(text);
  std::string line;
  auto need_dimension = [&](const std::string& section) {
    if (dimension < 0) throw TsplibError(section + " appears before DIMENSION");
  };
  auto read_token = [&](auto& value, const std::string& what) {
    if (!(in >> value)) throw TsplibError("truncated or malformed " + what);
  };

  while (std::getline(in, line)) {
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    const auto colon = t.find(':');
    const std::string key = detail::trim(t.substr(0, colon == std::string::npos ? t.size() : colon));
    const std::string value = colon == std::string::npos ? "" : detail::trim(t.substr(colon + 1));

    if (key == "EOF") break;
    if (key == "NAME") {
      out.name = value;
    } else if (key == "COMMENT") {
      out.comment += (out.comment.empty() ? "" : "\n") + value;
    } else if (key == "TYPE") {
      type = value;
      if (type != "TSP") throw TsplibError("unsupported TYPE: " + type);
    } else if (key == "DIMENSION") {
      try {
        dimension = std::stoi(value);
      } catch (const std::exception&) {
        throw TsplibError("bad DIMENSION: " + value);
      }
      if (dimension < 3) throw TsplibError("DIMENSION must be at least 3");
    } else if (key == "EDGE_WEIGHT_TYPE") {
      weight_type = value;
      if (weight_type != "EUC_2D" && weight_type != "EXPLICIT") {
        throw TsplibError("unsupported EDGE_WEIGHT_TYPE: " + weight_type);
      }
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      weight_format = value;
      if (weight_format != "FULL_MATRIX" && weight_format != "UPPER_ROW" &&
          weight_format != "LOWER_DIAG_ROW") {
        throw TsplibError("unsupported EDGE_WEIGHT_FORMAT: " + weight_format);
      }
    } else if (key == "NODE_COORD_TYPE") {
      if (value != "TWOD_COORDS") throw TsplibError("unsupported NODE_COORD_TYPE: " + value);
    } else if (key == "DISPLAY_DATA_TYPE") {
      // Presentation only.
    } else if (key == "NODE_COORD_SECTION") {
      need_dimension(key);
      xs.resize(dimension);
      ys.resize(dimension);
      for (int k = 0; k < dimension; ++k) {
        int id;
        read_token(id, "NODE_COORD_SECTION");
        if (id < 1 || id > dimension) throw TsplibError("node id out of range: " + std::to_string(id));
        read_token(xs[id - 1], "NODE_COORD_SECTION");
        read_token(ys[id - 1], "NODE_COORD_SECTION");
      }
      have_coords = true;
    } else if (key == "DISPLAY_DATA_SECTION") {
      need_dimension(key);
      double skip;
      for (int k = 0; k < 3 * dimension; ++k) read_token(skip, "DISPLAY_DATA_SECTION");
    } else if (key == "EDGE_WEIGHT_SECTION") {
      need_dimension(key);
      if (weight_format.empty()) throw TsplibError("EDGE_WEIGHT_SECTION without EDGE_WEIGHT_FORMAT");
      const long long n = dimension;
      const long long count = weight_format == "FULL_MATRIX" ? n * n
                              : weight_format == "UPPER_ROW" ? n * (n - 1) / 2
                                                             : n * (n + 1) / 2;
      weights.resize(count);
      for (auto& w : weights) read_token(w, "EDGE_WEIGHT_SECTION");
      have_weights = true;
    } else {
      throw TsplibError("unsupported keyword: " + key);
    }
  }

  if (type.empty()) throw TsplibError("missing TYPE");
  if (dimension < 0) throw TsplibError("missing DIMENSION");
  if (weight_type.empty()) throw TsplibError("missing EDGE_WEIGHT_TYPE");

  const int n = dimension;
  try {
    if (weight_type == "EUC_2D") {
      if (!have_coords) throw TsplibError("EUC_2D instance without NODE_COORD_SECTION");
      out.costs = CostMatrix<Cost>(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          out.costs.set(u, v, detail::nint(std::hypot(xs[u] - xs[v], ys[u] - ys[v])));
        }
      }
    } else {
      if (!have_weights) throw TsplibError("EXPLICIT instance without EDGE_WEIGHT_SECTION");
      if (weight_format == "FULL_MATRIX") {
        out.costs = CostMatrix<Cost>::from_full(n, weights);
      } else {
        out.costs = CostMatrix<Cost>(n);
        std::size_t k = 0;
        for (int u = 0; u < n; ++u) {
          if (weight_format == "UPPER_ROW") {
            for (int v = u + 1; v < n; ++v) out.costs.set(u, v, weights[k++]);
          } else {
            for (int v = 0; v <= u; ++v) {
              const Cost w = weights[k++];
              if (v == u) {
                if (w < 0) throw TsplibError("negative diagonal weight");
              } else {
                out.costs.set(u, v, w);
              }
            }
          }
        }
      }
    }
  } catch (const std::invalid_argument& e) {
    throw TsplibError(std::string("invalid weights: ") + e.what());
  }
  return out;
}

inline CostMatrix<Cost> parse_tsplib(const std::string& text) {
  return parse_tsplib_instance(text).costs;
}

inline TsplibInstance read_tsplib_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw TsplibError("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_tsplib_instance(buffer.str());
}

// EXPLICIT / FULL_MATRIX rendering of any integer matrix.
template <CostAccess C>
std::string emit_tsplib_full_matrix(const C& costs, const std::string& name) {
  std::ostringstream out;
  const int n = costs.size();
  out << "NAME : " << name << "\nTYPE : TSP\nDIMENSION : " << n
      << "\nEDGE_WEIGHT_TYPE : EXPLICIT\nEDGE_WEIGHT_FORMAT : FULL_MATRIX\nEDGE_WEIGHT_SECTION\n";
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) out << (v ? " " : "") << costs(u, v);
    out << "\n";
  }
  out << "EOF\n";
  return out.str();
}

// Seeded generators. All draws come from std::mt19937_64 seeded with the
// given value and reduced with `% range`, so streams are identical on
// every conforming standard library.
struct RandomMatrixSpec {
  int n = 12;
  Cost max_cost = 1000;
  std::uint64_t seed = 0;
};

struct RandomEuclideanSpec {
  int n = 100;
  Cost box = 1000000;
  std::uint64_t seed = 0;
};

// Symmetric, integer costs uniform in [1, max_cost].
inline CostMatrix<Cost> generate_random(const RandomMatrixSpec& spec) {
  if (spec.max_cost < 1) throw std::invalid_argument("random matrix: max cost must be >= 1");
  std::mt19937_64 rng(spec.seed);
  CostMatrix<Cost> m(spec.n);
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      m.set(u, v, 1 + static_cast<Cost>(rng() % static_cast<std::uint64_t>(spec.max_cost)));
    }
  }
  return m;
}

// Integer points in [0, box]^2; costs are Euclidean distances rounded up,
// which keeps the triangle inequality.
inline CostMatrix<Cost> generate_random(const RandomEuclideanSpec& spec) {
  if (spec.box < 1) throw std::invalid_argument("random euclidean: box must be >= 1");
  std::mt19937_64 rng(spec.seed);
  const auto range = static_cast<std::uint64_t>(spec.box) + 1;
  std::vector<Cost> xs(spec.n), ys(spec.n);
  for (int k = 0; k < spec.n; ++k) {
    xs[k] = static_cast<Cost>(rng() % range);
    ys[k] = static_cast<Cost>(rng() % range);
  }
  CostMatrix<Cost> m(spec.n);
  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      const double dx = static_cast<double>(xs[u] - xs[v]);
      const double dy = static_cast<double>(ys[u] - ys[v]);
      m.set(u, v, static_cast<Cost>(std::ceil(std::sqrt(dx * dx + dy * dy))));
    }
  }
  return m;
}

}  // namespace fouropt
