// Copyright 2026 The daqc Authors
//
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

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace daqc {

/// Undirected edge between two distinct qubits, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Canonical edge {a, b}. Throws std::invalid_argument for a self-loop.
Edge make_edge(int a, int b);

/**
 * Symmetric ZZ coupling graph over L qubits.
 *
 * The weight of edge {i, j} is the coefficient g_ij of Z_i Z_j. Absent edges
 * have weight zero; explicit zero weights are kept so sparse targets and
 * disabled slots stay representable.
 */
class CouplingGraph {
public:
  explicit CouplingGraph(int num_qubits);

  /// K_L with every edge set to `weight`.
  static CouplingGraph complete(int num_qubits, double weight);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }

  void set(int i, int j, double value);
  void add(int i, int j, double value);
  [[nodiscard]] double weight(int i, int j) const;

  [[nodiscard]] const std::map<Edge, double>& weights() const {
    return weights_;
  }

  /// Largest |g_ij - other.g_ij| over the union of both edge sets.
  [[nodiscard]] double max_abs_difference(const CouplingGraph& other) const;

private:
  void check_pair(int i, int j) const;

  int num_qubits_;
  std::map<Edge, double> weights_;
};

/// Nearest-neighbour chain: slot j couples qubits j and j+1.
class NNChain {
public:
  NNChain(int num_qubits, std::vector<double> couplings);

  static NNChain uniform(int num_qubits, double coupling);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::size_t num_slots() const { return couplings_.size(); }
  [[nodiscard]] const std::vector<double>& couplings() const {
    return couplings_;
  }
  [[nodiscard]] double operator[](std::size_t slot) const {
    return couplings_[slot];
  }

private:
  int num_qubits_;
  std::vector<double> couplings_;
};

/**
 * A Hamiltonian path written as the order in which it visits the vertices.
 * Entry j is the qubit sitting at position j; consecutive entries are joined
 * by an edge.
 */
class VertexPermutation {
public:
  /// Throws std::invalid_argument unless `order` is a bijection on [0, n).
  explicit VertexPermutation(std::vector<int> order);

  static VertexPermutation identity(int size);

  [[nodiscard]] int size() const { return static_cast<int>(order_.size()); }
  [[nodiscard]] int operator[](std::size_t position) const {
    return order_[position];
  }
  [[nodiscard]] const std::vector<int>& order() const { return order_; }

  /// Swaps the entries at positions i and i+1.
  void swap_adjacent(int i);

  bool operator==(const VertexPermutation&) const = default;

private:
  std::vector<int> order_;
};

/// A family of paths plus, per path, the slots whose edge is switched off.
struct PathCover {
  std::vector<VertexPermutation> paths;
  std::vector<std::set<int>> disabled_slots;

  [[nodiscard]] bool enabled(std::size_t path, int slot) const {
    return !disabled_slots[path].contains(slot);
  }
  [[nodiscard]] std::size_t enabled_edge_count() const;
};

/// Path k (label in [1, L/2] for even L, [1, (L+1)/2] for odd L) of the
/// rotated zig-zag family, 0-based entries.
VertexPermutation walecki_path(int k, int num_qubits);

/// The L/2 paths whose edge sets partition K_L. Requires even L >= 2.
std::vector<VertexPermutation> walecki_paths(int num_qubits);

/// The (L+1)/2 zig-zag paths for odd L >= 3. Edges repeated by a later path
/// are disabled there, so every edge of K_L is enabled exactly once.
PathCover walecki_paths_odd(int num_qubits);

/// Even L: walecki_paths with nothing disabled. Odd L: walecki_paths_odd.
PathCover walecki_cover(int num_qubits);

/// The L-1 edges {p[j], p[j+1]}, in slot order.
std::vector<Edge> path_edges(const VertexPermutation& path);

/**
 * Sum of weighted path evolutions as a single graph: every enabled slot j of
 * path k adds times[k] * slot_weights[k][j] to edge {p[j], p[j+1]}.
 */
CouplingGraph compose_weighted_paths(
    const PathCover& cover,
    const std::vector<std::vector<double>>& slot_weights,
    const std::vector<double>& times);

}  // namespace daqc
