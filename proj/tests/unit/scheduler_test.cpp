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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "daqc/errors.hpp"
#include "daqc/scheduler.hpp"
#include "daqc/verifier.hpp"
#include "support/oracles.hpp"

namespace daqc {
namespace {

constexpr double kPi = std::numbers::pi;

double residual(const BlockSchedule& s, std::span<const double> angles,
                const NNChain& resource) {
  double worst = 0.0;
  for (std::size_t j = 0; j < angles.size(); ++j) {
    double acc = 0.0;
    for (const auto& b : s.blocks) {
      acc += b.duration * mask_slot_signs(b.x_mask)[j] * resource[j];
    }
    worst = std::max(worst, std::abs(acc - angles[j]));
  }
  return worst;
}

TEST(SignMatrix, Entries) {
  const auto m = m_matrix(3).dense();
  Eigen::MatrixXd expected(3, 3);
  expected << 1, 1, 1, -1, 1, 1, -1, -1, 1;
  EXPECT_EQ(m, expected);
}

TEST(SignMatrix, InverseByRowOperations) {
  for (int n = 1; n <= 64; ++n) {
    const Eigen::MatrixXd m = m_matrix(n).dense();
    const Eigen::MatrixXd inv = m_inverse(n);
    const Eigen::MatrixXd lu = m.fullPivLu().inverse();
    EXPECT_LT((inv - lu).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n;
    EXPECT_LT((m * inv - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(),
              1e-14);
  }
}

TEST(SolveTimes, WorkedExample) {
  const std::vector<double> b{1.0, 0.5, 0.25};
  const auto t = solve_times(b, 1.0);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_DOUBLE_EQ(t[0], 0.25);
  EXPECT_DOUBLE_EQ(t[1], 0.125);
  EXPECT_DOUBLE_EQ(t[2], 0.625);
  EXPECT_THROW(solve_times(std::vector<double>{0.5, 1.0}, 1.0),
               std::invalid_argument);
  EXPECT_THROW(solve_times(std::vector<double>{0.5, -0.1}, 1.0),
               std::invalid_argument);
}

TEST(SolveTimes, SatisfiesLinearSystem) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 64; n += 7) {
    auto b = testing::uniform_vector(static_cast<std::size_t>(n), rng, 0.0, 2.0);
    std::sort(b.begin(), b.end(), std::greater<>());
    const auto t = solve_times(b, 1.0);
    const Eigen::VectorXd tv = Eigen::Map<const Eigen::VectorXd>(t.data(), n);
    const Eigen::VectorXd bv = m_matrix(n).dense() * tv;
    for (int i = 0; i < n; ++i) EXPECT_NEAR(bv[i], b[i], 1e-14);
  }
}

TEST(Normalize, SortsAndFlips) {
  const std::vector<double> b{0.5, -2.0, 1.0, -0.5};
  const auto norm = normalize(b);
  EXPECT_EQ(norm.sorted, (std::vector<double>{2.0, 1.0, 0.5, 0.5}));
  EXPECT_EQ(norm.record.slot_order, (std::vector<int>{1, 2, 0, 3}));
  EXPECT_EQ(norm.record.slot_sign_flips,
            (std::vector<bool>{false, true, false, true}));
  EXPECT_EQ(norm.record.positions(), (std::vector<int>{2, 0, 1, 3}));
}

TEST(Masks, FromSignColumn) {
  NormalizationRecord identity{{0, 1, 2}, {false, false, false}};
  const std::vector<int> signs{-1, 1, 1};
  EXPECT_EQ(mask_from_row(signs, identity, 4),
            (std::vector<bool>{false, true, true, true}));
  NormalizationRecord flipped{{0, 1, 2}, {false, true, false}};
  EXPECT_EQ(mask_from_row(signs, flipped, 4),
            (std::vector<bool>{false, true, false, false}));
}

TEST(Masks, SlotSignsInvertMask) {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 10; ++n) {
    std::vector<int> signs(static_cast<std::size_t>(n - 1));
    for (auto& s : signs) s = rng() % 2 ? 1 : -1;
    NormalizationRecord id;
    for (int j = 0; j + 1 < n; ++j) id.slot_order.push_back(j);
    id.slot_sign_flips.assign(static_cast<std::size_t>(n - 1), false);
    const auto mask = mask_from_row(signs, id, n);
    EXPECT_FALSE(mask[0]);
    EXPECT_EQ(mask_slot_signs(mask), signs);
  }
}

TEST(BlockSigns, ColumnOfM) {
  EXPECT_EQ(block_signs(0, 3), (std::vector<int>{1, -1, -1}));
  EXPECT_EQ(block_signs(2, 3), (std::vector<int>{1, 1, 1}));
}

TEST(Ratios, Errors) {
  const NNChain chain(3, {1.0, 0.0});
  EXPECT_NO_THROW(ratios(std::vector<double>{0.3, 0.0}, chain, 1.0));
  try {
    ratios(std::vector<double>{0.3, 0.2}, chain, 1.0);
    FAIL() << "expected UnschedulableError";
  } catch (const UnschedulableError& e) {
    EXPECT_EQ(e.slot(), 1);
  }
  EXPECT_THROW(ratios(std::vector<double>{0.3, 0.0}, chain, 0.0),
               std::invalid_argument);
  EXPECT_THROW(ratios(std::vector<double>{0.3}, chain, 1.0),
               std::invalid_argument);
}

TEST(Schedule, ResourceEqualsTarget) {
  const NNChain chain(4, {1.0, -0.5, 2.0});
  const double t_f = 0.3;
  const std::vector<double> angles{0.3, -0.15, 0.6};
  const auto s = schedule(angles, chain, t_f);
  ASSERT_EQ(s.blocks.size(), 1u);
  EXPECT_DOUBLE_EQ(s.blocks[0].duration, t_f);
  EXPECT_EQ(s.blocks[0].x_mask, (std::vector<bool>(4, false)));
}

TEST(Schedule, OppositeSignsOnTwoSlots) {
  const NNChain chain(6, {1.0, 0.8, 1.0, 1.3, 1.0});
  const std::vector<double> angles{0.0, kPi / 4.0, 0.0, -kPi / 4.0, 0.0};
  const auto s = schedule(angles, chain, 1.0);
  EXPECT_EQ(s.blocks.size(), 3u);
  EXPECT_LT(residual(s, angles, chain), 1e-14);
  EXPECT_NEAR(s.total_time(), min_sim_time(ratios(angles, chain, 1.0), 1.0),
              1e-15);
}

TEST(Schedule, RandomReconstruction) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const NNChain chain(n, testing::random_resource(n - 1, rng));
    const double t_f = 0.1 + (rng() % 100) / 50.0;
    auto angles = testing::uniform_vector(n - 1, rng, -1.0, 1.0);
    for (auto& a : angles) a *= t_f;
    const auto s = schedule(angles, chain, t_f);
    EXPECT_LT(residual(s, angles, chain), 1e-12);
    EXPECT_LE(s.blocks.size(), static_cast<std::size_t>(n - 1));
    for (const auto& b : s.blocks) {
      EXPECT_GE(b.duration, 0.0);
      EXPECT_EQ(b.x_mask.size(), static_cast<std::size_t>(n));
    }
  }
}

TEST(Schedule, DuplicatesAndZerosShrink) {
  const int n = 8;
  const NNChain chain = NNChain::uniform(n, 1.0);
  // Distinct magnitudes: n - 1 blocks.
  std::vector<double> distinct{0.9, -0.8, 0.7, 0.6, -0.5, 0.4, 0.3};
  EXPECT_EQ(schedule(distinct, chain, 1.0).blocks.size(), 7u);
  // Two duplicated magnitudes remove two blocks.
  std::vector<double> dup{0.9, -0.9, 0.7, 0.6, -0.6, 0.4, 0.3};
  EXPECT_EQ(schedule(dup, chain, 1.0).blocks.size(), 5u);
  // Three zeros collapse into one trailing sign pattern.
  std::vector<double> zeros{0.9, 0.0, 0.7, 0.0, -0.5, 0.0, 0.3};
  EXPECT_LE(schedule(zeros, chain, 1.0).blocks.size(), 5u);
  EXPECT_TRUE(schedule(std::vector<double>(7, 0.0), chain, 1.0).blocks.empty());
}

TEST(Schedule, UnitaryMatchesTarget) {
  std::mt19937_64 rng(37);
  for (int n = 2; n <= 6; ++n) {
    const NNChain chain(n, testing::random_resource(n - 1, rng));
    const auto angles = testing::uniform_vector(n - 1, rng, -1.0, 1.0);
    Circuit c(n);
    for (auto& b : schedule(angles, chain, 1.0).blocks) c.append(b);
    CouplingGraph target(n);
    for (int j = 0; j + 1 < n; ++j) target.set(j, j + 1, angles[j]);
    EXPECT_LT(phase_distance(circuit_unitary(c, chain),
                             testing::zz_reference(target))
                  .distance,
              1e-10);
  }
}

TEST(MinSimTime, LargestRatio) {
  EXPECT_DOUBLE_EQ(min_sim_time(std::vector<double>{0.2, -1.5, 0.7}, 2.0), 3.0);
}

}  // namespace
}  // namespace daqc
