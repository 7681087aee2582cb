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

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "daqc/circuit.hpp"
#include "daqc/graph.hpp"

namespace daqc {

/**
 * Dense 2^L x 2^L operator, row-major.
 *
 * Basis convention: qubit 0 is the most significant bit of the basis index
 * (Kronecker order q0 (x) q1 (x) ...). Bit value 0 means Z = +1, bit value 1
 * means Z = -1.
 */
using UnitaryMatrix =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                  Eigen::RowMajor>;

/// Default limit on L for dense simulation (1024 x 1024).
inline constexpr int kDefaultQubitCap = 10;

struct DistanceReport {
  /// sqrt(max(0, 1 - |tr(U^dag V)| / 2^L)); zero iff V = e^{i phase} U.
  double distance = 0.0;
  /// arg tr(U^dag V).
  double phase = 0.0;
};

/// Diagonal of exp(i sum_{uv} phi_uv Z_u Z_v) as phases.
Eigen::VectorXd zz_phases(const CouplingGraph& angles,
                          int max_qubits = kDefaultQubitCap);

UnitaryMatrix zz_evolution(const CouplingGraph& angles,
                           int max_qubits = kDefaultQubitCap);

Eigen::Matrix2cd single_qubit_matrix(const Gate& gate);
Eigen::Matrix4cd two_qubit_matrix(GateKind kind);

/// 4x4 unitary of U(alpha, beta, gamma) on qubits (0, 1).
Eigen::Matrix4cd general_swap_unitary(const GeneralSwap& swap);

UnitaryMatrix gate_unitary(const Gate& gate, int num_qubits,
                           int max_qubits = kDefaultQubitCap);

/**
 * Ordered product of all instruction unitaries. Analog requests are ideal
 * ZZ evolutions; resource blocks are X-conjugated evolutions under the
 * resource chain. Purely diagonal circuits skip the dense path.
 */
UnitaryMatrix circuit_unitary(const Circuit& circuit, const NNChain& resource,
                              int max_qubits = kDefaultQubitCap);

/// Phase diagonal of the circuit, or nullopt if any instruction is not
/// diagonal.
std::optional<Eigen::VectorXd> circuit_phases(const Circuit& circuit,
                                              const NNChain& resource,
                                              int max_qubits = kDefaultQubitCap);

/// exp(i t_f sum g'_ij Z_i Z_j).
UnitaryMatrix exact_target(const CouplingGraph& target, double t_f,
                           int max_qubits = kDefaultQubitCap);

DistanceReport phase_distance(const UnitaryMatrix& u, const UnitaryMatrix& v);
DistanceReport phase_distance(const Eigen::VectorXd& phases_u,
                              const Eigen::VectorXd& phases_v);

bool is_unitary(const UnitaryMatrix& u, double tolerance = 1e-10);

}  // namespace daqc
