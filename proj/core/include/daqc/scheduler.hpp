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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "daqc/circuit.hpp"
#include "daqc/graph.hpp"

namespace daqc {

/// Per-slot target-to-resource ratios b_j = phi_j / (g_j t_f).
using RatioVector = std::vector<double>;

/**
 * How a ratio vector was brought into canonical form: slots with negative
 * ratio are sign-flipped in every block, then slots are sorted by |b|
 * descending (ties keep slot order).
 */
struct NormalizationRecord {
  /// slot_order[p] is the original slot at sorted position p.
  std::vector<int> slot_order;
  /// Indexed by original slot.
  std::vector<bool> slot_sign_flips;

  /// positions()[slot] is the sorted position of `slot`.
  [[nodiscard]] std::vector<int> positions() const;
};

struct NormalizedRatios {
  RatioVector sorted;
  NormalizationRecord record;
};

/**
 * The n x n sign matrix M with b = M t / t_f. Entry (row, col) is +1 when
 * col >= row and -1 otherwise. Rows are sorted slots; column n holds the
 * coupling signs used during block n.
 */
class SignMatrix {
public:
  explicit SignMatrix(int n);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int operator()(int row, int col) const {
    return col >= row ? 1 : -1;
  }
  [[nodiscard]] Eigen::MatrixXd dense() const;

private:
  int n_;
};

/// One analog block of an inhomogeneous NN schedule.
struct BlockSchedule {
  std::vector<ResourceBlock> blocks;
  double t_f = 0.0;

  [[nodiscard]] double total_time() const;
};

RatioVector ratios(std::span<const double> target_angles,
                   const NNChain& resource, double t_f);

NormalizedRatios normalize(std::span<const double> b);

SignMatrix m_matrix(int n);

/// M^-1 by the two row-operation sweeps (average with the first row, then
/// subtract the next row). Test oracle only; schedule() uses the closed form.
Eigen::MatrixXd m_inverse(int n);

/// Closed-form block durations for sorted, non-negative, non-increasing b:
/// t_k = t_f (b_k - b_{k+1}) / 2 and t_last = t_f (b_first + b_last) / 2.
std::vector<double> solve_times(std::span<const double> b_sorted, double t_f);

/// Coupling signs of block `block` per sorted position (column of M).
std::vector<int> block_signs(int block, int n);

/**
 * X mask realizing one block's signs. `signs` is indexed by sorted position;
 * the record maps it back to chain slots and folds in the global sign
 * flips. The mask starts unset on qubit 0 and toggles across every slot
 * whose effective sign is -1.
 */
std::vector<bool> mask_from_row(std::span<const int> signs,
                                const NormalizationRecord& record,
                                int num_qubits);

/// (-1)^(f_j + f_{j+1}) for each slot of a mask.
std::vector<int> mask_slot_signs(const std::vector<bool>& mask);

/**
 * Resource blocks whose combined evolution is exp(i sum phi_j Z_j Z_{j+1}).
 * Blocks no longer than epsilon * t_f are dropped.
 */
BlockSchedule schedule(std::span<const double> target_angles,
                       const NNChain& resource, double t_f,
                       double epsilon = 1e-12);

/// max_j |b_j| * t_f, the least total analog time any schedule can use.
double min_sim_time(std::span<const double> b, double t_f);

}  // namespace daqc
