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

#include "daqc/compiler.hpp"

#include <stdexcept>
#include <string>
#include <variant>

#include "daqc/errors.hpp"
#include "daqc/scheduler.hpp"

namespace daqc {

namespace {

void check_width(const Circuit& circuit, const NNChain& resource) {
  if (circuit.num_qubits() != resource.num_qubits()) {
    throw std::invalid_argument("circuit and resource chain differ in width");
  }
}

}  // namespace

Circuit schedule_requests(const Circuit& circuit, const NNChain& resource,
                          double t_f, double epsilon) {
  check_width(circuit, resource);
  Circuit out(circuit.num_qubits());
  std::size_t request_index = 0;
  for (const auto& inst : circuit.instructions()) {
    const auto* request = std::get_if<AnalogRequest>(&inst);
    if (request == nullptr) {
      out.append(inst);
      continue;
    }
    try {
      for (auto& block :
           schedule(request->slot_angles, resource, t_f, epsilon).blocks) {
        out.append(std::move(block));
      }
    } catch (const UnschedulableError& e) {
      throw UnschedulableError(
          e.slot(), "analog request " + std::to_string(request_index) + ": " +
                        e.what());
    }
    ++request_index;
  }
  return out;
}

CompiledProgram compile_ata(const CouplingGraph& target,
                            const NNChain& resource, double t_f,
                            double epsilon) {
  if (target.num_qubits() != resource.num_qubits()) {
    throw std::invalid_argument("target and resource chain differ in width");
  }
  Circuit high = ata_circuit_general(target, t_f);
  Circuit lowered = lower_iswaps(high);
  Circuit scheduled = schedule_requests(lowered, resource, t_f, epsilon);
  return {std::move(high), std::move(lowered), std::move(scheduled)};
}

CompiledProgram compile_nn(std::span<const double> target_angles,
                           const NNChain& resource, double t_f,
                           double epsilon) {
  Circuit high(resource.num_qubits());
  high.append(AnalogRequest{{target_angles.begin(), target_angles.end()}});
  Circuit scheduled = schedule_requests(high, resource, t_f, epsilon);
  Circuit lowered = high;
  return {std::move(high), std::move(lowered), std::move(scheduled)};
}

double minimal_analog_time(const Circuit& circuit, const NNChain& resource,
                           double t_f) {
  check_width(circuit, resource);
  double total = 0.0;
  for (const auto& inst : circuit.instructions()) {
    if (const auto* request = std::get_if<AnalogRequest>(&inst)) {
      total += min_sim_time(ratios(request->slot_angles, resource, t_f), t_f);
    }
  }
  return total;
}

}  // namespace daqc
