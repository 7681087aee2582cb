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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "daqc/permutation.hpp"
#include "support/oracles.hpp"

namespace daqc {
namespace {

TEST(SequenceS, Runs) {
  EXPECT_EQ(sequence_s(0, 5, 6), (TranspositionLayer{0, 2, 4}));
  EXPECT_EQ(sequence_s(1, 4, 6), (TranspositionLayer{1, 3}));
  EXPECT_EQ(sequence_s(2, 3, 6), (TranspositionLayer{2}));
  EXPECT_TRUE(sequence_s(3, 3, 6).empty());
  EXPECT_TRUE(sequence_s(4, 2, 6).empty());
}

TEST(ValidateLayer, RejectsOverlapAndRange) {
  EXPECT_NO_THROW(validate_layer({0, 2}, 4));
  EXPECT_THROW(validate_layer({0, 1}, 4), std::invalid_argument);
  EXPECT_THROW(validate_layer({3}, 4), std::invalid_argument);
  EXPECT_THROW(validate_layer({-1}, 4), std::invalid_argument);
}

TEST(ApplySequence, MatchesHandSwaps) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 9; ++n) {
    TranspositionSequence seq;
    std::vector<std::vector<int>> raw;
    for (int step = 0; step < 12; ++step) {
      TranspositionLayer layer;
      for (int i = static_cast<int>(rng() % 2); i + 1 < n; i += 2) {
        if (rng() % 3 != 0) layer.push_back(i);
      }
      seq.layers.push_back(layer);
      raw.push_back(layer);
    }
    std::vector<int> start(static_cast<std::size_t>(n));
    std::iota(start.begin(), start.end(), 0);
    std::shuffle(start.begin(), start.end(), rng);
    EXPECT_EQ(apply_sequence(VertexPermutation(start), seq).order(),
              testing::swap_by_hand(start, raw));
  }
}

TEST(TranspositionSequence, ReversedUndoes) {
  TranspositionSequence seq{{{0, 2}, {1}, {2}, {0}}};
  EXPECT_EQ(seq.transposition_count(), 5u);
  TranspositionSequence round = seq;
  round.append(seq.reversed());
  EXPECT_EQ(apply_sequence(VertexPermutation::identity(4), round),
            VertexPermutation::identity(4));
}

TEST(Groups, Depths) {
  for (int n = 2; n <= 12; n += 2) {
    for (int k = 1; k <= n / 2; ++k) {
      EXPECT_EQ(group_g1(k).depth(), static_cast<std::size_t>(2 * k - 2));
      EXPECT_EQ(group_g2(k, n).depth(),
                static_cast<std::size_t>(std::max(0, n - 2 * k - 1)));
    }
  }
}

// After the low-block layers the first 2k positions hold 0..2k-1 in order;
// the high-block layers then finish the sort.
TEST(Groups, SortBlockByBlock) {
  for (int n = 2; n <= 12; n += 2) {
    for (int k = 1; k <= n / 2; ++k) {
      const auto path = walecki_path(k, n);
      const auto low = apply_sequence(path, group_g1(k));
      for (int i = 0; i < 2 * k; ++i) {
        EXPECT_EQ(low[i], i) << "L=" << n << " k=" << k;
      }
      for (int i = 2 * k; i < n; ++i) EXPECT_EQ(low[i], path[i]);
      EXPECT_EQ(apply_sequence(low, group_g2(k, n)),
                VertexPermutation::identity(n));
    }
  }
}

TEST(SynthesizeWalecki, ReproducesPaths) {
  for (int n = 2; n <= 12; n += 2) {
    for (int k = 1; k <= n / 2; ++k) {
      const auto seq = synthesize_walecki(k, n);
      EXPECT_EQ(apply_sequence(VertexPermutation::identity(n), seq).order(),
                testing::zigzag_reference(k, n));
      for (const auto& layer : seq.layers) validate_layer(layer, n);
    }
  }
}

TEST(SynthesizeWalecki, RejectsOddAndRange) {
  EXPECT_THROW(synthesize_walecki(1, 5), std::invalid_argument);
  EXPECT_THROW(synthesize_walecki(4, 6), std::invalid_argument);
}

TEST(SynthesizeGeneric, RandomTargets) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      const VertexPermutation target(order);
      const auto seq = synthesize_generic(target);
      EXPECT_LE(seq.depth(), static_cast<std::size_t>(n));
      EXPECT_EQ(apply_sequence(VertexPermutation::identity(n), seq), target);
    }
  }
}

TEST(SynthesizeGeneric, IdentityIsEmpty) {
  EXPECT_TRUE(synthesize_generic(VertexPermutation::identity(6)).empty());
}

}  // namespace
}  // namespace daqc
