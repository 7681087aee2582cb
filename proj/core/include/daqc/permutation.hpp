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

#include <cstddef>
#include <vector>

#include "daqc/graph.hpp"

namespace daqc {

/// One parallel step of adjacent transpositions. Each entry i stands for the
/// swap of positions (i, i+1); no position may be touched twice.
using TranspositionLayer = std::vector<int>;

/// Ordered layers of adjacent transpositions, applied first to last.
struct TranspositionSequence {
  std::vector<TranspositionLayer> layers;

  [[nodiscard]] bool empty() const { return layers.empty(); }
  [[nodiscard]] std::size_t depth() const { return layers.size(); }
  [[nodiscard]] std::size_t transposition_count() const;

  /// Same layers in reverse order. Every transposition is an involution, so
  /// this undoes the sequence.
  [[nodiscard]] TranspositionSequence reversed() const;

  void append(const TranspositionSequence& other);

  bool operator==(const TranspositionSequence&) const = default;
};

/// Throws std::invalid_argument if a transposition leaves [0, size) or two
/// transpositions of the layer share a position.
void validate_layer(const TranspositionLayer& layer, int size);

/**
 * The parallel run tau(first, first+1) tau(first+2, first+3) ... ending at
 * position `last` (0-based, inclusive). Returns an empty layer when
 * first >= last.
 */
TranspositionLayer sequence_s(int first, int last, int size);

/// Sorting layers for the low block of path k, in application order
/// (k is the 1-based path label). Empty for k = 1.
TranspositionSequence group_g1(int k);

/// Sorting layers for the high block of path k on L positions, in
/// application order. Empty when 2k + 1 > L.
TranspositionSequence group_g2(int k, int num_qubits);

/// Applies each layer as position swaps, first layer first.
VertexPermutation apply_sequence(const VertexPermutation& permutation,
                                 const TranspositionSequence& sequence);

/// Layers that carry the identity to walecki_path(k, L). Requires even L.
TranspositionSequence synthesize_walecki(int k, int num_qubits);

/// Odd-even transposition sort, recorded in reverse so that applying the
/// result to the identity yields `target`. At most L layers.
TranspositionSequence synthesize_generic(const VertexPermutation& target);

}  // namespace daqc
