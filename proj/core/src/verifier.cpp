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

#include "daqc/verifier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

#include "daqc/errors.hpp"

namespace daqc {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

void check_cap(int num_qubits, int max_qubits) {
  if (num_qubits > max_qubits) {
    throw ResourceLimitError("dense simulation of " +
                             std::to_string(num_qubits) +
                             " qubits exceeds the cap of " +
                             std::to_string(max_qubits));
  }
}

std::size_t bit_of(int qubit, int num_qubits) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

// Spin value (+1 / -1) of `qubit` in basis state `index`.
int spin(std::size_t index, int qubit, int num_qubits) {
  return (index & bit_of(qubit, num_qubits)) != 0 ? -1 : 1;
}

void apply_single(UnitaryMatrix& u, int qubit, const Eigen::Matrix2cd& m,
                  int num_qubits) {
  const std::size_t bit = bit_of(qubit, num_qubits);
  const auto dim = static_cast<std::size_t>(u.rows());
  for (std::size_t i0 = 0; i0 < dim; ++i0) {
    if ((i0 & bit) != 0) continue;
    const std::size_t i1 = i0 | bit;
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      const cd a = u(i0, c);
      const cd b = u(i1, c);
      u(i0, c) = m(0, 0) * a + m(0, 1) * b;
      u(i1, c) = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

void apply_x(UnitaryMatrix& u, int qubit, int num_qubits) {
  const std::size_t bit = bit_of(qubit, num_qubits);
  const auto dim = static_cast<std::size_t>(u.rows());
  for (std::size_t i0 = 0; i0 < dim; ++i0) {
    if ((i0 & bit) == 0) u.row(i0).swap(u.row(i0 | bit));
  }
}

void apply_pair(UnitaryMatrix& u, int qubit, const Eigen::Matrix4cd& m,
                int num_qubits) {
  const std::size_t hi = bit_of(qubit, num_qubits);
  const std::size_t lo = bit_of(qubit + 1, num_qubits);
  const auto dim = static_cast<std::size_t>(u.rows());
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & (hi | lo)) != 0) continue;
    const std::size_t idx[4] = {base, base | lo, base | hi, base | hi | lo};
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      cd in[4];
      for (int r = 0; r < 4; ++r) in[r] = u(idx[r], c);
      for (int r = 0; r < 4; ++r) {
        u(idx[r], c) = m(r, 0) * in[0] + m(r, 1) * in[1] + m(r, 2) * in[2] +
                       m(r, 3) * in[3];
      }
    }
  }
}

void apply_phases(UnitaryMatrix& u, const Eigen::VectorXd& phases) {
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    u.row(r) *= std::exp(kI * phases[r]);
  }
}

void add_chain_phases(Eigen::VectorXd& phases, const std::vector<double>& slot,
                      int num_qubits) {
  for (Eigen::Index idx = 0; idx < phases.size(); ++idx) {
    const auto i = static_cast<std::size_t>(idx);
    double acc = 0.0;
    for (int j = 0; j + 1 < num_qubits; ++j) {
      if (slot[j] == 0.0) continue;
      acc += slot[j] * spin(i, j, num_qubits) * spin(i, j + 1, num_qubits);
    }
    phases[idx] += acc;
  }
}

std::vector<double> resource_angles(const ResourceBlock& block,
                                    const NNChain& resource) {
  std::vector<double> angles(resource.num_slots());
  for (std::size_t j = 0; j < angles.size(); ++j) {
    const double sign = block.x_mask[j] == block.x_mask[j + 1] ? 1.0 : -1.0;
    angles[j] = sign * block.duration * resource[j];
  }
  return angles;
}

std::vector<double> resource_angles_unsigned(const ResourceBlock& block,
                                             const NNChain& resource) {
  std::vector<double> angles(resource.num_slots());
  for (std::size_t j = 0; j < angles.size(); ++j) {
    angles[j] = block.duration * resource[j];
  }
  return angles;
}

void check_resource(const Circuit& circuit, const NNChain& resource) {
  if (circuit.num_qubits() != resource.num_qubits()) {
    throw std::invalid_argument("circuit and resource chain differ in width");
  }
}

}  // namespace

Eigen::VectorXd zz_phases(const CouplingGraph& angles, int max_qubits) {
  const int n = angles.num_qubits();
  check_cap(n, max_qubits);
  const auto dim = std::size_t{1} << n;
  Eigen::VectorXd phases = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    double acc = 0.0;
    for (const auto& [edge, phi] : angles.weights()) {
      acc += phi * spin(i, edge.u, n) * spin(i, edge.v, n);
    }
    phases[static_cast<Eigen::Index>(i)] = acc;
  }
  return phases;
}

UnitaryMatrix zz_evolution(const CouplingGraph& angles, int max_qubits) {
  const Eigen::VectorXd phases = zz_phases(angles, max_qubits);
  UnitaryMatrix u = UnitaryMatrix::Zero(phases.size(), phases.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) {
    u(i, i) = std::exp(kI * phases[i]);
  }
  return u;
}

Eigen::Matrix2cd single_qubit_matrix(const Gate& gate) {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd m;
  switch (gate.kind) {
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::H:
      m << s, s, s, -s;
      break;
    case GateKind::R:
      // H S H
      m << cd(0.5, 0.5), cd(0.5, -0.5), cd(0.5, -0.5), cd(0.5, 0.5);
      break;
    case GateKind::RDagger:
      m << cd(0.5, -0.5), cd(0.5, 0.5), cd(0.5, 0.5), cd(0.5, -0.5);
      break;
    case GateKind::Rz:
      m << std::exp(kI * (gate.angle / 2.0)), 0, 0,
          std::exp(-kI * (gate.angle / 2.0));
      break;
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
  return m;
}

Eigen::Matrix4cd two_qubit_matrix(GateKind kind) {
  if (kind != GateKind::ISwap && kind != GateKind::ISwapDagger) {
    throw std::invalid_argument("not a two-qubit gate");
  }
  const cd off = kind == GateKind::ISwap ? kI : -kI;
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 2) = off;
  m(2, 1) = off;
  m(3, 3) = 1.0;
  return m;
}

Eigen::Matrix4cd general_swap_unitary(const GeneralSwap& swap) {
  // exp(i pi/4 (XX + YY + c ZZ)): XX + YY acts as 2 sigma_x on {|01>, |10>}
  // and vanishes on {|00>, |11>}; ZZ is diagonal and commutes with it.
  const double quarter = std::numbers::pi / 4.0;
  const double c = swap.zz_coefficient;
  Eigen::Matrix4cd core = Eigen::Matrix4cd::Zero();
  core(0, 0) = std::exp(kI * (quarter * c));
  core(3, 3) = std::exp(kI * (quarter * c));
  const cd odd = std::exp(-kI * (quarter * c));
  const double half_angle = 2.0 * quarter;
  core(1, 1) = odd * std::cos(half_angle);
  core(2, 2) = odd * std::cos(half_angle);
  core(1, 2) = odd * kI * std::sin(half_angle);
  core(2, 1) = odd * kI * std::sin(half_angle);
  auto rz_first = [](double theta) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    const cd up = std::exp(kI * (theta / 2.0));
    const cd down = std::exp(-kI * (theta / 2.0));
    m(0, 0) = up;
    m(1, 1) = up;
    m(2, 2) = down;
    m(3, 3) = down;
    return m;
  };
  return rz_first(swap.trailing_rz) * core * rz_first(swap.leading_rz);
}

UnitaryMatrix gate_unitary(const Gate& gate, int num_qubits, int max_qubits) {
  check_cap(num_qubits, max_qubits);
  const int last = gate.is_two_qubit() ? gate.qubit + 1 : gate.qubit;
  if (gate.qubit < 0 || last >= num_qubits) {
    throw std::invalid_argument("gate qubit out of range");
  }
  const auto dim = Eigen::Index{1} << num_qubits;
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  if (gate.is_two_qubit()) {
    apply_pair(u, gate.qubit, two_qubit_matrix(gate.kind), num_qubits);
  } else {
    apply_single(u, gate.qubit, single_qubit_matrix(gate), num_qubits);
  }
  return u;
}

std::optional<Eigen::VectorXd> circuit_phases(const Circuit& circuit,
                                              const NNChain& resource,
                                              int max_qubits) {
  check_resource(circuit, resource);
  const int n = circuit.num_qubits();
  check_cap(n, max_qubits);
  Eigen::VectorXd phases = Eigen::VectorXd::Zero(Eigen::Index{1} << n);
  for (const auto& inst : circuit.instructions()) {
    if (const auto* layer = std::get_if<DigitalLayer>(&inst)) {
      for (const Gate& g : layer->gates) {
        if (g.kind != GateKind::Rz) return std::nullopt;
        for (Eigen::Index i = 0; i < phases.size(); ++i) {
          phases[i] += g.angle / 2.0 *
                       spin(static_cast<std::size_t>(i), g.qubit, n);
        }
      }
    } else if (const auto* request = std::get_if<AnalogRequest>(&inst)) {
      add_chain_phases(phases, request->slot_angles, n);
    } else {
      add_chain_phases(phases,
                       resource_angles(std::get<ResourceBlock>(inst), resource),
                       n);
    }
  }
  return phases;
}

UnitaryMatrix circuit_unitary(const Circuit& circuit, const NNChain& resource,
                              int max_qubits) {
  if (auto phases = circuit_phases(circuit, resource, max_qubits)) {
    UnitaryMatrix u = UnitaryMatrix::Zero(phases->size(), phases->size());
    for (Eigen::Index i = 0; i < phases->size(); ++i) {
      u(i, i) = std::exp(kI * (*phases)[i]);
    }
    return u;
  }
  const int n = circuit.num_qubits();
  const auto dim = Eigen::Index{1} << n;
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  for (const auto& inst : circuit.instructions()) {
    if (const auto* layer = std::get_if<DigitalLayer>(&inst)) {
      for (const Gate& g : layer->gates) {
        if (g.is_two_qubit()) {
          apply_pair(u, g.qubit, two_qubit_matrix(g.kind), n);
        } else if (g.kind == GateKind::X) {
          apply_x(u, g.qubit, n);
        } else {
          apply_single(u, g.qubit, single_qubit_matrix(g), n);
        }
      }
    } else if (const auto* request = std::get_if<AnalogRequest>(&inst)) {
      Eigen::VectorXd phases = Eigen::VectorXd::Zero(dim);
      add_chain_phases(phases, request->slot_angles, n);
      apply_phases(u, phases);
    } else {
      // Literal X conjugation around the unsigned resource evolution.
      const auto& block = std::get<ResourceBlock>(inst);
      for (int q = 0; q < n; ++q) {
        if (block.x_mask[q]) apply_x(u, q, n);
      }
      Eigen::VectorXd phases = Eigen::VectorXd::Zero(dim);
      add_chain_phases(phases, resource_angles_unsigned(block, resource), n);
      apply_phases(u, phases);
      for (int q = 0; q < n; ++q) {
        if (block.x_mask[q]) apply_x(u, q, n);
      }
    }
  }
  return u;
}

UnitaryMatrix exact_target(const CouplingGraph& target, double t_f,
                           int max_qubits) {
  CouplingGraph angles(target.num_qubits());
  for (const auto& [edge, g] : target.weights()) {
    angles.set(edge.u, edge.v, g * t_f);
  }
  return zz_evolution(angles, max_qubits);
}

// For unitaries 1 - |tr(U^dag V)| / d = ||V - e^{i phase} U||_F^2 / (2d).
// The norm form avoids the cancellation in 1 - |tr| / d, which would floor
// the distance near 1e-8.
DistanceReport phase_distance(const UnitaryMatrix& u, const UnitaryMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("operator dimensions differ");
  }
  const cd trace = (u.conjugate().array() * v.array()).sum();
  const double phase = std::arg(trace);
  const double residual =
      (v.array() - std::polar(1.0, phase) * u.array()).abs2().sum();
  const double dim = static_cast<double>(u.rows());
  return {std::sqrt(std::max(0.0, residual / (2.0 * dim))), phase};
}

DistanceReport phase_distance(const Eigen::VectorXd& phases_u,
                              const Eigen::VectorXd& phases_v) {
  if (phases_u.size() != phases_v.size()) {
    throw std::invalid_argument("operator dimensions differ");
  }
  cd trace = 0.0;
  for (Eigen::Index i = 0; i < phases_u.size(); ++i) {
    trace += std::exp(kI * (phases_v[i] - phases_u[i]));
  }
  const double phase = std::arg(trace);
  double residual = 0.0;
  for (Eigen::Index i = 0; i < phases_u.size(); ++i) {
    const double s = std::sin(0.5 * (phases_v[i] - phases_u[i] - phase));
    residual += 4.0 * s * s;
  }
  const double dim = static_cast<double>(phases_u.size());
  return {std::sqrt(residual / (2.0 * dim)), phase};
}

bool is_unitary(const UnitaryMatrix& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  const UnitaryMatrix product = u.adjoint() * u;
  return (product - UnitaryMatrix::Identity(u.rows(), u.cols()))
             .cwiseAbs()
             .maxCoeff() <= tolerance;
}

}  // namespace daqc
