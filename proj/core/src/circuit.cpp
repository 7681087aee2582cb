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

#include "daqc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace daqc {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

GateKind inverse_two_qubit(GateKind kind) {
  return kind == GateKind::ISwap ? GateKind::ISwapDagger : GateKind::ISwap;
}

DigitalLayer iswap_layer(const TranspositionLayer& layer, GateKind kind) {
  DigitalLayer out;
  out.gates.reserve(layer.size());
  for (const int i : layer) out.gates.push_back({kind, i, 0.0});
  return out;
}

void check_even(int num_qubits, const char* what) {
  if (num_qubits < 2 || num_qubits % 2 != 0) {
    throw std::invalid_argument(std::string(what) +
                                " needs an even L >= 2, got " +
                                std::to_string(num_qubits));
  }
}

// Appends `next` after `pending`, cancelling ISwap/ISwapDagger pairs on the
// same qubits between the two adjacent layers. A layer emptied this way is
// removed and cancellation continues against the layer before it.
void push_cancelling(std::vector<DigitalLayer>& pending, DigitalLayer next) {
  while (!pending.empty() && !next.gates.empty()) {
    DigitalLayer& back = pending.back();
    for (auto it = next.gates.begin(); it != next.gates.end();) {
      const auto match = std::find_if(
          back.gates.begin(), back.gates.end(), [&](const Gate& g) {
            return it->is_two_qubit() && g.qubit == it->qubit &&
                   g.kind == inverse_two_qubit(it->kind);
          });
      if (match != back.gates.end()) {
        back.gates.erase(match);
        it = next.gates.erase(it);
      } else {
        ++it;
      }
    }
    if (!back.gates.empty()) break;
    pending.pop_back();
  }
  if (!next.gates.empty()) pending.push_back(std::move(next));
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::R: return "r";
    case GateKind::RDagger: return "rdg";
    case GateKind::Rz: return "rz";
    case GateKind::ISwap: return "iswap";
    case GateKind::ISwapDagger: return "iswapdg";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const GateKind kind :
       {GateKind::X, GateKind::H, GateKind::R, GateKind::RDagger, GateKind::Rz,
        GateKind::ISwap, GateKind::ISwapDagger}) {
    if (gate_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool DigitalLayer::has_two_qubit_gate() const {
  return std::any_of(gates.begin(), gates.end(),
                     [](const Gate& g) { return g.is_two_qubit(); });
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) {
    throw std::invalid_argument("a circuit needs at least one qubit");
  }
}

void Circuit::append(DigitalLayer layer) {
  if (layer.gates.empty()) return;
  std::vector<bool> touched(static_cast<std::size_t>(num_qubits_), false);
  auto claim = [&](int q) {
    if (q < 0 || q >= num_qubits_) {
      throw std::invalid_argument("gate on qubit " + std::to_string(q) +
                                  " outside a " + std::to_string(num_qubits_) +
                                  "-qubit circuit");
    }
    if (touched[q]) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  " appears twice in one layer");
    }
    touched[q] = true;
  };
  for (const Gate& g : layer.gates) {
    claim(g.qubit);
    if (g.is_two_qubit()) claim(g.qubit + 1);
    if (!std::isfinite(g.angle)) {
      throw std::invalid_argument("non-finite gate angle");
    }
  }
  instructions_.emplace_back(std::move(layer));
}

void Circuit::append(AnalogRequest request) {
  if (request.slot_angles.size() !=
      static_cast<std::size_t>(num_qubits_ - 1)) {
    throw std::invalid_argument("analog request needs " +
                                std::to_string(num_qubits_ - 1) +
                                " slot angles");
  }
  for (const double a : request.slot_angles) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("non-finite analog angle");
    }
  }
  instructions_.emplace_back(std::move(request));
}

void Circuit::append(ResourceBlock block) {
  if (!std::isfinite(block.duration) || block.duration < 0.0) {
    throw std::invalid_argument("resource block duration must be >= 0");
  }
  if (block.x_mask.size() != static_cast<std::size_t>(num_qubits_)) {
    throw std::invalid_argument("resource block mask needs " +
                                std::to_string(num_qubits_) + " entries");
  }
  instructions_.emplace_back(std::move(block));
}

void Circuit::append(const Instruction& instruction) {
  std::visit([this](const auto& inst) { append(inst); }, instruction);
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("cannot concatenate circuits of different width");
  }
  for (const auto& inst : other.instructions_) append(inst);
}

bool GeneralSwap::is_bare_iswap(double tolerance) const {
  return std::abs(leading_rz) <= tolerance &&
         std::abs(zz_coefficient) <= tolerance &&
         std::abs(trailing_rz) <= tolerance;
}

GeneralSwap general_swap(const GeneralSwapParams& p) {
  const double half_diff = (p.gamma - p.alpha) / 2.0;
  GeneralSwap out;
  out.leading_rz = std::numbers::pi * (half_diff - 0.5 - p.beta);
  out.zz_coefficient = p.gamma + p.alpha;
  out.trailing_rz = std::numbers::pi * (half_diff + 0.5 + p.beta);
  return out;
}

std::vector<DigitalLayer> frame_entry_layers(
    const TranspositionSequence& sequence) {
  std::vector<DigitalLayer> out;
  for (const auto& layer : sequence.layers) {
    out.push_back(iswap_layer(layer, GateKind::ISwap));
  }
  return out;
}

std::vector<DigitalLayer> frame_exit_layers(
    const TranspositionSequence& sequence) {
  std::vector<DigitalLayer> out;
  for (auto it = sequence.layers.rbegin(); it != sequence.layers.rend(); ++it) {
    out.push_back(iswap_layer(*it, GateKind::ISwapDagger));
  }
  return out;
}

std::vector<DigitalLayer> f_gates(int k, int num_qubits) {
  check_even(num_qubits, "f_gates");
  const int half = num_qubits / 2;
  if (k < 0 || k > half) {
    throw std::invalid_argument("f_gates index " + std::to_string(k) +
                                " out of range [0, L/2]");
  }
  if (k == 0) {
    // Enter the first path frame: the high-block sorting layers of path 1,
    // undone in reverse.
    return frame_entry_layers(group_g2(1, num_qubits).reversed());
  }
  if (k == half) {
    // Leave the last path frame.
    std::vector<DigitalLayer> out;
    for (const auto& layer : group_g1(half).layers) {
      out.push_back(iswap_layer(layer, GateKind::ISwapDagger));
    }
    return out;
  }
  // Pair (i, i+1) gets ISwap inside the first 2k qubits and ISwapDagger
  // beyond; even pairs go first, then odd pairs.
  std::vector<DigitalLayer> out(2);
  for (int i = 0; i + 1 < num_qubits; ++i) {
    const GateKind kind = i < 2 * k ? GateKind::ISwap : GateKind::ISwapDagger;
    out[i % 2].gates.push_back({kind, i, 0.0});
  }
  return out;
}

std::vector<std::vector<double>> path_slot_angles(const PathCover& cover,
                                                  const CouplingGraph& target,
                                                  double t_f) {
  std::vector<std::vector<double>> angles;
  angles.reserve(cover.paths.size());
  for (std::size_t p = 0; p < cover.paths.size(); ++p) {
    const VertexPermutation& path = cover.paths[p];
    std::vector<double> slots(static_cast<std::size_t>(path.size() - 1), 0.0);
    for (int j = 0; j + 1 < path.size(); ++j) {
      if (cover.enabled(p, j)) {
        slots[j] = t_f * target.weight(path[j], path[j + 1]);
      }
    }
    angles.push_back(std::move(slots));
  }
  return angles;
}

Circuit ata_circuit(int num_qubits, double t_f, double coupling) {
  if (num_qubits % 2 != 0) {
    throw std::invalid_argument(
        "ata_circuit handles even L only; use ata_circuit_general for odd L");
  }
  check_even(num_qubits, "ata_circuit");
  return ata_circuit_general(CouplingGraph::complete(num_qubits, coupling),
                             t_f);
}

Circuit ata_circuit_general(const CouplingGraph& target, double t_f) {
  if (!std::isfinite(t_f)) {
    throw std::invalid_argument("t_f must be finite");
  }
  const int num_qubits = target.num_qubits();
  const PathCover cover = walecki_cover(num_qubits);
  const auto angles = path_slot_angles(cover, target, t_f);
  Circuit circuit(num_qubits);

  if (num_qubits % 2 == 0) {
    const int half = num_qubits / 2;
    for (auto& layer : f_gates(0, num_qubits)) circuit.append(std::move(layer));
    for (int k = 1; k <= half; ++k) {
      circuit.append(AnalogRequest{angles[k - 1]});
      for (auto& layer : f_gates(k, num_qubits)) {
        circuit.append(std::move(layer));
      }
    }
    return circuit;
  }

  std::vector<DigitalLayer> pending;
  std::vector<DigitalLayer> exit;
  for (std::size_t p = 0; p < cover.paths.size(); ++p) {
    const TranspositionSequence seq = synthesize_generic(cover.paths[p]);
    pending = std::move(exit);
    for (auto& layer : frame_entry_layers(seq)) {
      push_cancelling(pending, std::move(layer));
    }
    for (auto& layer : pending) circuit.append(std::move(layer));
    circuit.append(AnalogRequest{angles[p]});
    exit = frame_exit_layers(seq);
  }
  for (auto& layer : exit) circuit.append(std::move(layer));
  return circuit;
}

Circuit path_sequence_circuit(const CouplingGraph& target, double t_f) {
  const int num_qubits = target.num_qubits();
  check_even(num_qubits, "path_sequence_circuit");
  const PathCover cover = walecki_cover(num_qubits);
  const auto angles = path_slot_angles(cover, target, t_f);
  Circuit circuit(num_qubits);
  for (int k = 1; k <= num_qubits / 2; ++k) {
    const TranspositionSequence seq = synthesize_walecki(k, num_qubits);
    for (auto& layer : frame_entry_layers(seq)) circuit.append(std::move(layer));
    circuit.append(AnalogRequest{angles[k - 1]});
    for (auto& layer : frame_exit_layers(seq)) circuit.append(std::move(layer));
  }
  return circuit;
}

std::vector<Instruction> lower_iswap_layer(const DigitalLayer& layer,
                                           int num_qubits) {
  std::vector<Instruction> out;
  if (layer.gates.empty()) return out;
  std::vector<double> angles(static_cast<std::size_t>(num_qubits - 1), 0.0);
  std::vector<int> touched;
  for (const Gate& g : layer.gates) {
    if (!g.is_two_qubit()) {
      throw std::invalid_argument(
          "lower_iswap_layer expects only two-qubit gates");
    }
    if (g.qubit < 0 || g.qubit + 1 >= num_qubits) {
      throw std::invalid_argument("iSWAP pair out of range");
    }
    angles[g.qubit] = g.kind == GateKind::ISwap ? kQuarterPi : -kQuarterPi;
    touched.push_back(g.qubit);
    touched.push_back(g.qubit + 1);
  }
  std::sort(touched.begin(), touched.end());

  auto single = [&](Gate (*make)(int)) {
    DigitalLayer l;
    for (const int q : touched) l.gates.push_back(make(q));
    return l;
  };
  // exp(i a XX) = H H exp(i a ZZ) H H and exp(i a YY) = R-dg exp(i a ZZ) R
  // on each pair; XX and YY commute.
  out.emplace_back(single(&Gate::h));
  out.emplace_back(AnalogRequest{angles});
  out.emplace_back(single(&Gate::h));
  out.emplace_back(single(&Gate::r));
  out.emplace_back(AnalogRequest{angles});
  out.emplace_back(single(&Gate::r_dagger));
  return out;
}

Circuit lower_iswaps(const Circuit& circuit) {
  Circuit out(circuit.num_qubits());
  for (const auto& inst : circuit.instructions()) {
    const auto* layer = std::get_if<DigitalLayer>(&inst);
    if (layer == nullptr || !layer->has_two_qubit_gate()) {
      out.append(inst);
      continue;
    }
    DigitalLayer singles;
    DigitalLayer pairs;
    for (const Gate& g : layer->gates) {
      (g.is_two_qubit() ? pairs : singles).gates.push_back(g);
    }
    out.append(std::move(singles));
    for (const auto& lowered : lower_iswap_layer(pairs, circuit.num_qubits())) {
      out.append(lowered);
    }
  }
  return out;
}

ScheduleStats stats(const Circuit& circuit) {
  ScheduleStats s;
  for (const auto& inst : circuit.instructions()) {
    if (const auto* layer = std::get_if<DigitalLayer>(&inst)) {
      if (layer->has_two_qubit_gate()) ++s.iswap_layer_count;
      for (const Gate& g : layer->gates) {
        if (!g.is_two_qubit()) ++s.sqr_count;
      }
    } else if (std::holds_alternative<AnalogRequest>(inst)) {
      ++s.analog_request_count;
    } else {
      const auto& block = std::get<ResourceBlock>(inst);
      ++s.analog_block_count;
      s.total_analog_time += block.duration;
      s.x_gate_count +=
          2 * static_cast<std::size_t>(
                  std::count(block.x_mask.begin(), block.x_mask.end(), true));
    }
  }
  return s;
}

}  // namespace daqc
