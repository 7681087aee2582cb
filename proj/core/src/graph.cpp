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

#include "daqc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace daqc {

namespace {

int floor_mod(int value, int modulus) {
  const int r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

Edge make_edge(int a, int b) {
  if (a == b) {
    throw std::invalid_argument("self-loop on qubit " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

CouplingGraph::CouplingGraph(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 2) {
    throw std::invalid_argument("a coupling graph needs at least 2 qubits");
  }
}

CouplingGraph CouplingGraph::complete(int num_qubits, double weight) {
  CouplingGraph graph(num_qubits);
  for (int i = 0; i < num_qubits; ++i) {
    for (int j = i + 1; j < num_qubits; ++j) {
      graph.set(i, j, weight);
    }
  }
  return graph;
}

void CouplingGraph::check_pair(int i, int j) const {
  if (i < 0 || j < 0 || i >= num_qubits_ || j >= num_qubits_) {
    throw std::invalid_argument("qubit index out of range: (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  }
  if (i == j) {
    throw std::invalid_argument("self-loop on qubit " + std::to_string(i));
  }
}

void CouplingGraph::set(int i, int j, double value) {
  check_pair(i, j);
  weights_[make_edge(i, j)] = value;
}

void CouplingGraph::add(int i, int j, double value) {
  check_pair(i, j);
  weights_[make_edge(i, j)] += value;
}

double CouplingGraph::weight(int i, int j) const {
  check_pair(i, j);
  const auto it = weights_.find(make_edge(i, j));
  return it == weights_.end() ? 0.0 : it->second;
}

double CouplingGraph::max_abs_difference(const CouplingGraph& other) const {
  double worst = 0.0;
  for (const auto& [edge, value] : weights_) {
    const auto it = other.weights_.find(edge);
    const double rhs = it == other.weights_.end() ? 0.0 : it->second;
    worst = std::max(worst, std::abs(value - rhs));
  }
  for (const auto& [edge, value] : other.weights_) {
    if (!weights_.contains(edge)) {
      worst = std::max(worst, std::abs(value));
    }
  }
  return worst;
}

NNChain::NNChain(int num_qubits, std::vector<double> couplings)
    : num_qubits_(num_qubits), couplings_(std::move(couplings)) {
  if (num_qubits < 2) {
    throw std::invalid_argument("a chain needs at least 2 qubits");
  }
  if (couplings_.size() != static_cast<std::size_t>(num_qubits - 1)) {
    throw std::invalid_argument(
        "chain of " + std::to_string(num_qubits) + " qubits needs " +
        std::to_string(num_qubits - 1) + " couplings, got " +
        std::to_string(couplings_.size()));
  }
}

NNChain NNChain::uniform(int num_qubits, double coupling) {
  if (num_qubits < 2) {
    throw std::invalid_argument("a chain needs at least 2 qubits");
  }
  return NNChain(num_qubits,
                 std::vector<double>(static_cast<std::size_t>(num_qubits - 1),
                                     coupling));
}

VertexPermutation::VertexPermutation(std::vector<int> order)
    : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (const int v : order_) {
    if (v < 0 || static_cast<std::size_t>(v) >= order_.size() || seen[v]) {
      throw std::invalid_argument("vertex order is not a permutation");
    }
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(int size) {
  std::vector<int> order(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) order[i] = i;
  return VertexPermutation(std::move(order));
}

void VertexPermutation::swap_adjacent(int i) {
  if (i < 0 || i + 1 >= size()) {
    throw std::invalid_argument("adjacent swap out of range at position " +
                                std::to_string(i));
  }
  std::swap(order_[i], order_[i + 1]);
}

std::size_t PathCover::enabled_edge_count() const {
  std::size_t count = 0;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    count += static_cast<std::size_t>(paths[p].size() - 1) -
             disabled_slots[p].size();
  }
  return count;
}

VertexPermutation walecki_path(int k, int num_qubits) {
  if (num_qubits < 2) {
    throw std::invalid_argument("walecki_path needs at least 2 qubits");
  }
  if (k < 1 || k > (num_qubits + 1) / 2) {
    throw std::invalid_argument("path label " + std::to_string(k) +
                                " out of range");
  }
  // Positions are 1-based in the closed form; entries come out 0-based.
  std::vector<int> order(static_cast<std::size_t>(num_qubits));
  for (int j = 1; j <= num_qubits; ++j) {
    const int offset = (j % 2 == 0) ? j / 2 : -(j - 1) / 2;
    order[j - 1] = floor_mod(k - 1 + offset, num_qubits);
  }
  return VertexPermutation(std::move(order));
}

std::vector<VertexPermutation> walecki_paths(int num_qubits) {
  if (num_qubits < 2 || num_qubits % 2 != 0) {
    throw std::invalid_argument("walecki_paths needs an even L >= 2, got " +
                                std::to_string(num_qubits));
  }
  std::vector<VertexPermutation> paths;
  paths.reserve(static_cast<std::size_t>(num_qubits / 2));
  for (int k = 1; k <= num_qubits / 2; ++k) {
    paths.push_back(walecki_path(k, num_qubits));
  }
  return paths;
}

PathCover walecki_paths_odd(int num_qubits) {
  if (num_qubits < 3 || num_qubits % 2 == 0) {
    throw std::invalid_argument("walecki_paths_odd needs an odd L >= 3, got " +
                                std::to_string(num_qubits));
  }
  PathCover cover;
  std::set<Edge> used;
  for (int k = 1; k <= (num_qubits + 1) / 2; ++k) {
    VertexPermutation path = walecki_path(k, num_qubits);
    std::set<int> disabled;
    for (int slot = 0; slot + 1 < num_qubits; ++slot) {
      if (!used.insert(make_edge(path[slot], path[slot + 1])).second) {
        disabled.insert(slot);
      }
    }
    cover.paths.push_back(std::move(path));
    cover.disabled_slots.push_back(std::move(disabled));
  }
  return cover;
}

PathCover walecki_cover(int num_qubits) {
  if (num_qubits % 2 != 0) return walecki_paths_odd(num_qubits);
  PathCover cover;
  cover.paths = walecki_paths(num_qubits);
  cover.disabled_slots.resize(cover.paths.size());
  return cover;
}

std::vector<Edge> path_edges(const VertexPermutation& path) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::max(path.size() - 1, 0)));
  for (int j = 0; j + 1 < path.size(); ++j) {
    edges.push_back(make_edge(path[j], path[j + 1]));
  }
  return edges;
}

CouplingGraph compose_weighted_paths(
    const PathCover& cover,
    const std::vector<std::vector<double>>& slot_weights,
    const std::vector<double>& times) {
  if (cover.paths.empty()) {
    throw std::invalid_argument("empty path cover");
  }
  if (slot_weights.size() != cover.paths.size() ||
      times.size() != cover.paths.size() ||
      cover.disabled_slots.size() != cover.paths.size()) {
    throw std::invalid_argument("path, weight and time counts differ");
  }
  const int num_qubits = cover.paths.front().size();
  CouplingGraph graph(num_qubits);
  for (std::size_t p = 0; p < cover.paths.size(); ++p) {
    const VertexPermutation& path = cover.paths[p];
    if (path.size() != num_qubits ||
        slot_weights[p].size() != static_cast<std::size_t>(num_qubits - 1)) {
      throw std::invalid_argument("path " + std::to_string(p) +
                                  " has mismatched length");
    }
    for (int slot = 0; slot + 1 < num_qubits; ++slot) {
      const double w = slot_weights[p][slot];
      if (!cover.enabled(p, slot)) {
        if (w != 0.0) {
          throw std::invalid_argument("disabled slot " + std::to_string(slot) +
                                      " of path " + std::to_string(p) +
                                      " carries a nonzero weight");
        }
        continue;
      }
      graph.add(path[slot], path[slot + 1], times[p] * w);
    }
  }
  return graph;
}

}  // namespace daqc
