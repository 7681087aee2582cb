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
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "daqc/graph.hpp"
#include "daqc/permutation.hpp"

namespace daqc {

/**
 * Gate kinds used by the compiler.
 *
 * Single-qubit: X, H, R = H S H (S the phase gate), its adjoint, and
 * Rz(theta) = exp(i theta Z / 2). Two-qubit gates act on adjacent qubits
 * (q, q+1) only: ISwap = exp(i pi/4 (XX + YY)) and its adjoint.
 */
enum class GateKind { X, H, R, RDagger, Rz, ISwap, ISwapDagger };

struct Gate {
  GateKind kind = GateKind::X;
  /// Target qubit; for two-qubit gates the lower qubit of the pair.
  int qubit = 0;
  /// Rotation angle in radians (Rz only).
  double angle = 0.0;

  static Gate x(int q) { return {GateKind::X, q, 0.0}; }
  static Gate h(int q) { return {GateKind::H, q, 0.0}; }
  static Gate r(int q) { return {GateKind::R, q, 0.0}; }
  static Gate r_dagger(int q) { return {GateKind::RDagger, q, 0.0}; }
  static Gate rz(int q, double theta) { return {GateKind::Rz, q, theta}; }
  static Gate iswap(int q) { return {GateKind::ISwap, q, 0.0}; }
  static Gate iswap_dagger(int q) { return {GateKind::ISwapDagger, q, 0.0}; }

  [[nodiscard]] bool is_two_qubit() const {
    return kind == GateKind::ISwap || kind == GateKind::ISwapDagger;
  }

  bool operator==(const Gate&) const = default;
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Gates applied in parallel; no qubit is touched twice.
struct DigitalLayer {
  std::vector<Gate> gates;

  [[nodiscard]] bool has_two_qubit_gate() const;
  bool operator==(const DigitalLayer&) const = default;
};

/// Request for exp(i sum_j phi_j Z_j Z_{j+1}); phi_j in radians per slot.
struct AnalogRequest {
  std::vector<double> slot_angles;

  bool operator==(const AnalogRequest&) const = default;
};

/// Evolution under the resource chain for `duration`, with X applied before
/// and after on every qubit whose mask bit is set.
struct ResourceBlock {
  double duration = 0.0;
  std::vector<bool> x_mask;

  bool operator==(const ResourceBlock&) const = default;
};

using Instruction = std::variant<DigitalLayer, AnalogRequest, ResourceBlock>;

/// Ordered list of digital layers and analog evolutions on L qubits.
class Circuit {
public:
  explicit Circuit(int num_qubits);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] const std::vector<Instruction>& instructions() const {
    return instructions_;
  }
  [[nodiscard]] bool empty() const { return instructions_.empty(); }

  /// Empty layers are dropped. Throws std::invalid_argument on overlapping
  /// qubits, out-of-range indices or non-finite angles.
  void append(DigitalLayer layer);
  void append(AnalogRequest request);
  void append(ResourceBlock block);
  void append(const Instruction& instruction);
  void append(const Circuit& other);

  bool operator==(const Circuit&) const = default;

private:
  int num_qubits_;
  std::vector<Instruction> instructions_;
};

/// Free parameters of the most general Z-swapping two-qubit gate.
struct GeneralSwapParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/**
 * U(alpha, beta, gamma) = Rz1[trailing] exp(i pi/4 (XX + YY + c ZZ))
 * Rz1[leading], with c = zz_coefficient and both Rz on the first qubit.
 * `leading_rz` is applied first in time.
 */
struct GeneralSwap {
  double leading_rz = 0.0;
  double zz_coefficient = 0.0;
  double trailing_rz = 0.0;

  /// True when the gate reduces to a bare ISwap (all three terms zero).
  [[nodiscard]] bool is_bare_iswap(double tolerance = 0.0) const;
};

GeneralSwap general_swap(const GeneralSwapParams& params);

/**
 * iSWAP layers between consecutive path evolutions of the ATA circuit, in
 * time order. k = 0 enters the first path frame, k = L/2 leaves the last
 * one, and 1 <= k < L/2 moves from path k to path k+1 in two layers.
 */
std::vector<DigitalLayer> f_gates(int k, int num_qubits);

/// ISwap layers that, followed by an NN evolution and frame_exit_layers,
/// evolve along the path built by `sequence` from the identity.
std::vector<DigitalLayer> frame_entry_layers(const TranspositionSequence& sequence);

/// Inverse of frame_entry_layers: ISwapDagger layers in reverse order.
std::vector<DigitalLayer> frame_exit_layers(const TranspositionSequence& sequence);

/// Homogeneous ATA evolution exp(i t_f g sum_{i<j} Z_i Z_j) for even L.
Circuit ata_circuit(int num_qubits, double t_f, double coupling = 1.0);

/**
 * Arbitrary ATA ZZ evolution exp(i t_f sum g'_ij Z_i Z_j). Even L uses the
 * simplified F-gate circuit; odd L uses the odd path cover with sorted
 * frames, cancelling iSWAP/iSWAP-dagger pairs across frame boundaries.
 */
Circuit ata_circuit_general(const CouplingGraph& target, double t_f);

/// Unsimplified even-L circuit: every path gets its own entry and exit
/// frame from synthesize_walecki.
Circuit path_sequence_circuit(const CouplingGraph& target, double t_f);

/// Per-path slot angles t_f * g'_{p[j], p[j+1]}; disabled slots get 0.
std::vector<std::vector<double>> path_slot_angles(const PathCover& cover,
                                                  const CouplingGraph& target,
                                                  double t_f);

/**
 * Rewrites one layer of ISwap/ISwapDagger gates as
 * H, ZZ(+-pi/4), H, R, ZZ(+-pi/4), R-dagger on the touched qubits. The
 * result equals the layer up to a global phase.
 */
std::vector<Instruction> lower_iswap_layer(const DigitalLayer& layer,
                                           int num_qubits);

/// Applies lower_iswap_layer to every two-qubit gate in the circuit.
Circuit lower_iswaps(const Circuit& circuit);

struct ScheduleStats {
  std::size_t analog_block_count = 0;
  std::size_t analog_request_count = 0;
  double total_analog_time = 0.0;
  std::size_t sqr_count = 0;
  std::size_t x_gate_count = 0;
  std::size_t iswap_layer_count = 0;

  bool operator==(const ScheduleStats&) const = default;
};

/// Counts over the instruction list. x_gate_count counts the X gates implied
/// by resource-block masks (two per masked qubit).
ScheduleStats stats(const Circuit& circuit);

}  // namespace daqc
