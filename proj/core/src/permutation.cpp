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

#include "daqc/permutation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace daqc {

std::size_t TranspositionSequence::transposition_count() const {
  std::size_t count = 0;
  for (const auto& layer : layers) count += layer.size();
  return count;
}

TranspositionSequence TranspositionSequence::reversed() const {
  TranspositionSequence out;
  out.layers.assign(layers.rbegin(), layers.rend());
  return out;
}

void TranspositionSequence::append(const TranspositionSequence& other) {
  layers.insert(layers.end(), other.layers.begin(), other.layers.end());
}

void validate_layer(const TranspositionLayer& layer, int size) {
  std::vector<bool> touched(static_cast<std::size_t>(std::max(size, 0)),
                            false);
  for (const int i : layer) {
    if (i < 0 || i + 1 >= size) {
      throw std::invalid_argument("transposition (" + std::to_string(i) +
                                  ", " + std::to_string(i + 1) +
                                  ") out of range for size " +
                                  std::to_string(size));
    }
    if (touched[i] || touched[i + 1]) {
      throw std::invalid_argument("overlapping transpositions at position " +
                                  std::to_string(i));
    }
    touched[i] = touched[i + 1] = true;
  }
}

TranspositionLayer sequence_s(int first, int last, int size) {
  if (first < 0 || last < 0 || first >= size || last >= size) {
    throw std::invalid_argument("sequence bounds (" + std::to_string(first) +
                                ", " + std::to_string(last) +
                                ") out of range for size " +
                                std::to_string(size));
  }
  TranspositionLayer layer;
  for (int i = first; i + 1 <= last; i += 2) layer.push_back(i);
  return layer;
}

TranspositionSequence group_g1(int k) {
  if (k < 1) {
    throw std::invalid_argument("path label must be >= 1");
  }
  // Layer m (1-based) runs 1-based positions (m odd ? 2 : 1) -> 2k - m.
  TranspositionSequence seq;
  const int size = 2 * k;
  for (int m = 1; m <= 2 * k - 2; ++m) {
    const int first = (m % 2 == 1) ? 1 : 0;
    seq.layers.push_back(sequence_s(first, 2 * k - m - 1, size));
  }
  return seq;
}

TranspositionSequence group_g2(int k, int num_qubits) {
  if (k < 1) {
    throw std::invalid_argument("path label must be >= 1");
  }
  // Layer m (1-based) runs 1-based positions 2k + m -> (m odd ? L : L - 1).
  TranspositionSequence seq;
  for (int m = 1; m <= num_qubits - 2 * k - 1; ++m) {
    const int last = (m % 2 == 1) ? num_qubits - 1 : num_qubits - 2;
    seq.layers.push_back(sequence_s(2 * k + m - 1, last, num_qubits));
  }
  return seq;
}

VertexPermutation apply_sequence(const VertexPermutation& permutation,
                                 const TranspositionSequence& sequence) {
  VertexPermutation out = permutation;
  for (const auto& layer : sequence.layers) {
    validate_layer(layer, out.size());
    for (const int i : layer) out.swap_adjacent(i);
  }
  return out;
}

TranspositionSequence synthesize_walecki(int k, int num_qubits) {
  if (num_qubits < 2 || num_qubits % 2 != 0) {
    throw std::invalid_argument("synthesize_walecki needs an even L >= 2");
  }
  if (k < 1 || k > num_qubits / 2) {
    throw std::invalid_argument("path label " + std::to_string(k) +
                                " out of range [1, L/2]");
  }
  // G1 and G2 sort the path back to the identity; running the combined
  // sorting layers backwards builds the path from the identity.
  TranspositionSequence sorting = group_g1(k);
  sorting.append(group_g2(k, num_qubits));
  return sorting.reversed();
}

TranspositionSequence synthesize_generic(const VertexPermutation& target) {
  std::vector<int> work = target.order();
  const int size = target.size();
  TranspositionSequence sorting;
  int parity = 0;
  while (!std::is_sorted(work.begin(), work.end())) {
    TranspositionLayer layer;
    for (int i = parity; i + 1 < size; i += 2) {
      if (work[i] > work[i + 1]) {
        std::swap(work[i], work[i + 1]);
        layer.push_back(i);
      }
    }
    if (!layer.empty()) sorting.layers.push_back(std::move(layer));
    parity ^= 1;
  }
  return sorting.reversed();
}

}  // namespace daqc
