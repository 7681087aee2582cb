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

#include "daqc/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "daqc/errors.hpp"

namespace daqc {

std::vector<int> NormalizationRecord::positions() const {
  std::vector<int> pos(slot_order.size());
  for (std::size_t p = 0; p < slot_order.size(); ++p) {
    pos[slot_order[p]] = static_cast<int>(p);
  }
  return pos;
}

SignMatrix::SignMatrix(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("sign matrix dimension must be >= 1");
  }
}

Eigen::MatrixXd SignMatrix::dense() const {
  Eigen::MatrixXd m(n_, n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) m(r, c) = (*this)(r, c);
  }
  return m;
}

double BlockSchedule::total_time() const {
  double total = 0.0;
  for (const auto& b : blocks) total += b.duration;
  return total;
}

RatioVector ratios(std::span<const double> target_angles,
                   const NNChain& resource, double t_f) {
  if (!(t_f > 0.0) || !std::isfinite(t_f)) {
    throw std::invalid_argument("t_f must be positive and finite");
  }
  if (target_angles.size() != resource.num_slots()) {
    throw std::invalid_argument("target has " +
                                std::to_string(target_angles.size()) +
                                " slots, resource has " +
                                std::to_string(resource.num_slots()));
  }
  RatioVector b(target_angles.size(), 0.0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    const double phi = target_angles[j];
    const double g = resource[j];
    if (phi == 0.0) continue;
    if (g == 0.0) {
      throw UnschedulableError(
          static_cast<int>(j),
          "slot " + std::to_string(j) +
              " needs a nonzero angle but its resource coupling is zero");
    }
    b[j] = phi / (g * t_f);
  }
  return b;
}

NormalizedRatios normalize(std::span<const double> b) {
  NormalizedRatios out;
  const std::size_t n = b.size();
  out.record.slot_sign_flips.resize(n);
  out.record.slot_order.resize(n);
  std::iota(out.record.slot_order.begin(), out.record.slot_order.end(), 0);
  for (std::size_t j = 0; j < n; ++j) {
    out.record.slot_sign_flips[j] = b[j] < 0.0;
  }
  std::stable_sort(out.record.slot_order.begin(), out.record.slot_order.end(),
                   [&](int lhs, int rhs) {
                     return std::abs(b[lhs]) > std::abs(b[rhs]);
                   });
  out.sorted.reserve(n);
  for (const int slot : out.record.slot_order) {
    out.sorted.push_back(std::abs(b[slot]));
  }
  return out;
}

SignMatrix m_matrix(int n) { return SignMatrix(n); }

Eigen::MatrixXd m_inverse(int n) {
  Eigen::MatrixXd a = SignMatrix(n).dense();
  Eigen::MatrixXd inv = Eigen::MatrixXd::Identity(n, n);
  // Averaging every row with the first turns M upper-triangular ones.
  for (int i = 1; i < n; ++i) {
    a.row(i) = (a.row(i) + a.row(0)) / 2.0;
    inv.row(i) = (inv.row(i) + inv.row(0)) / 2.0;
  }
  // Differences of consecutive rows of that matrix give the identity.
  for (int i = 0; i + 1 < n; ++i) {
    a.row(i) -= a.row(i + 1);
    inv.row(i) -= inv.row(i + 1);
  }
  return inv;
}

std::vector<double> solve_times(std::span<const double> b_sorted, double t_f) {
  const std::size_t n = b_sorted.size();
  if (n == 0) return {};
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(b_sorted[j]) || b_sorted[j] < 0.0 ||
        (j + 1 < n && b_sorted[j] < b_sorted[j + 1])) {
      throw std::invalid_argument(
          "ratios must be finite, non-negative and non-increasing");
    }
  }
  std::vector<double> t(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    t[k] = t_f * (b_sorted[k] - b_sorted[k + 1]) / 2.0;
  }
  t[n - 1] = t_f * (b_sorted[0] + b_sorted[n - 1]) / 2.0;
  return t;
}

std::vector<int> block_signs(int block, int n) {
  const SignMatrix m(n);
  if (block < 0 || block >= n) {
    throw std::invalid_argument("block index out of range");
  }
  std::vector<int> signs(static_cast<std::size_t>(n));
  for (int row = 0; row < n; ++row) signs[row] = m(row, block);
  return signs;
}

std::vector<bool> mask_from_row(std::span<const int> signs,
                                const NormalizationRecord& record,
                                int num_qubits) {
  const std::size_t slots = static_cast<std::size_t>(num_qubits - 1);
  if (signs.size() != slots || record.slot_order.size() != slots ||
      record.slot_sign_flips.size() != slots) {
    throw std::invalid_argument("sign row does not match the chain length");
  }
  std::vector<bool> mask(static_cast<std::size_t>(num_qubits), false);
  const std::vector<int> pos = record.positions();
  for (std::size_t slot = 0; slot < slots; ++slot) {
    const bool negative =
        (signs[pos[slot]] < 0) != static_cast<bool>(record.slot_sign_flips[slot]);
    mask[slot + 1] = mask[slot] != negative;
  }
  return mask;
}

std::vector<int> mask_slot_signs(const std::vector<bool>& mask) {
  std::vector<int> signs;
  for (std::size_t j = 0; j + 1 < mask.size(); ++j) {
    signs.push_back(mask[j] == mask[j + 1] ? 1 : -1);
  }
  return signs;
}

BlockSchedule schedule(std::span<const double> target_angles,
                       const NNChain& resource, double t_f, double epsilon) {
  const RatioVector b = ratios(target_angles, resource, t_f);
  const NormalizedRatios norm = normalize(b);
  const std::vector<double> times = solve_times(norm.sorted, t_f);
  const int n = static_cast<int>(b.size());

  BlockSchedule out;
  out.t_f = t_f;
  for (int block = 0; block < n; ++block) {
    if (times[block] <= epsilon * t_f) continue;
    out.blocks.push_back(
        {times[block],
         mask_from_row(block_signs(block, n), norm.record,
                       resource.num_qubits())});
  }
  return out;
}

double min_sim_time(std::span<const double> b, double t_f) {
  double worst = 0.0;
  for (const double v : b) worst = std::max(worst, std::abs(v));
  return worst * t_f;
}

}  // namespace daqc
