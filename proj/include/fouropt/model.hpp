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

// Core numeric and structural types: cost matrices, tours, modular
// position arithmetic and the cost "views" the search engines run on.

#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace fouropt {

using Cost = std::int64_t;

// Smallest instance on which a complete 4-edge selection exists: every one
// of the four segments must hold at least one edge.
inline constexpr int kMinSearchNodes = 8;

// Anything that answers cost(u, v) for u, v in [0, size()).
template <class C>
concept CostAccess = requires(const C& c, int u, int v) {
  typename C::value_type;
  { c.size() } -> std::convertible_to<int>;
  { c(u, v) } -> std::convertible_to<typename C::value_type>;
};

// Dense symmetric cost matrix. The diagonal is stored but never read by
// any search routine.
template <class T = Cost>
class CostMatrix {
 public:
  using value_type = T;

  CostMatrix() = default;
  explicit CostMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, T{}) {
    if (n < 0) throw std::invalid_argument("CostMatrix: negative size");
  }

  int size() const { return n_; }

  T operator()(int u, int v) const { return data_[index(u, v)]; }

  // Sets both (u,v) and (v,u).
  void set(int u, int v, T value) {
    if (value < T{}) throw std::invalid_argument("CostMatrix: negative cost");
    data_[index(u, v)] = value;
    data_[index(v, u)] = value;
  }

  // Builds from a row-major n*n buffer and validates symmetry and sign.
  static CostMatrix from_full(int n, std::span<const T> values) {
    if (values.size() != static_cast<std::size_t>(n) * n) {
      throw std::invalid_argument("CostMatrix: expected " + std::to_string(n * n) +
                                  " values, got " + std::to_string(values.size()));
    }
    CostMatrix m(n);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const T x = values[static_cast<std::size_t>(u) * n + v];
        if (x < T{}) throw std::invalid_argument("CostMatrix: negative cost");
        if (u != v && x != values[static_cast<std::size_t>(v) * n + u]) {
          throw std::invalid_argument("CostMatrix: asymmetric entry at (" + std::to_string(u) +
                                      "," + std::to_string(v) + ")");
        }
        m.data_[m.index(u, v)] = x;
      }
    }
    return m;
  }

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<T> data_;
};

// Position arithmetic modulo n.
struct ModIndex {
  int value = 0;
  int n = 1;

  friend bool operator==(const ModIndex&, const ModIndex&) = default;
};

inline ModIndex mod_add(ModIndex x, int t) {
  const int r = (x.value + t % x.n) % x.n;
  return {r < 0 ? r + x.n : r, x.n};
}

inline ModIndex mod_sub(ModIndex x, int t) { return mod_add(x, -(t % x.n)); }

inline int succ(int p, int n) { return p + 1 == n ? 0 : p + 1; }

// A Hamiltonian cycle, stored as the visiting order of node ids.
class Tour {
 public:
  Tour() = default;
  explicit Tour(std::vector<int> order) : order_(std::move(order)) {
    std::vector<char> seen(order_.size(), 0);
    for (int v : order_) {
      if (v < 0 || v >= static_cast<int>(order_.size()) || seen[v]) {
        throw std::invalid_argument("Tour: order is not a permutation of 0..n-1");
      }
      seen[v] = 1;
    }
  }

  static Tour canonical(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return Tour(std::move(order));
  }

  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int pos) const { return order_[pos]; }
  std::span<const int> order() const { return order_; }

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  std::vector<int> order_;
};

template <CostAccess C>
typename C::value_type tour_length(const Tour& tour, const C& costs) {
  const int n = tour.size();
  if (n != costs.size()) {
    throw std::invalid_argument("tour_length: tour has " + std::to_string(n) +
                                " nodes but matrix has " + std::to_string(costs.size()));
  }
  typename C::value_type total{};
  for (int p = 0; p < n; ++p) total += costs(tour[p], tour[succ(p, n)]);
  return total;
}

// Costs seen through a tour: position p stands for node order[p], so the
// tour itself reads as the canonical 0 -> 1 -> ... -> n-1.
template <CostAccess C>
class TourOrderView {
 public:
  using value_type = typename C::value_type;

  TourOrderView(const C& costs, std::span<const int> order) : costs_(&costs), order_(order) {}

  int size() const { return static_cast<int>(order_.size()); }
  value_type operator()(int p, int q) const { return (*costs_)(order_[p], order_[q]); }

 private:
  const C* costs_;
  std::span<const int> order_;
};

// Costs with every label rotated forward by `shift` positions.
template <CostAccess C>
class ShiftedView {
 public:
  using value_type = typename C::value_type;

  ShiftedView(const C& costs, int shift) : costs_(&costs), shift_(shift), n_(costs.size()) {}

  int size() const { return n_; }
  value_type operator()(int p, int q) const {
    return (*costs_)(wrap(p + shift_), wrap(q + shift_));
  }

 private:
  int wrap(int x) const { return x >= n_ ? x - n_ : x; }

  const C* costs_;
  int shift_;
  int n_;
};

}  // namespace fouropt
