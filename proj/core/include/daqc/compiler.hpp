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

#include "daqc/circuit.hpp"
#include "daqc/graph.hpp"

namespace daqc {

/// Relative threshold below which scheduled blocks are dropped.
inline constexpr double kDefaultEpsilon = 1e-12;

/// A compilation at its three stages: iSWAP-level, ZZ-request level, and
/// resource blocks plus single-qubit layers.
struct CompiledProgram {
  Circuit high_level;
  Circuit lowered;
  Circuit scheduled;
};

/**
 * Replaces every AnalogRequest with the resource blocks returned by
 * schedule(). Digital layers and existing resource blocks pass through.
 * Throws UnschedulableError naming the offending slot.
 */
Circuit schedule_requests(const Circuit& circuit, const NNChain& resource,
                          double t_f, double epsilon = kDefaultEpsilon);

CompiledProgram compile_ata(const CouplingGraph& target,
                            const NNChain& resource, double t_f,
                            double epsilon = kDefaultEpsilon);

CompiledProgram compile_nn(std::span<const double> target_angles,
                           const NNChain& resource, double t_f,
                           double epsilon = kDefaultEpsilon);

/// Sum over analog requests of their minimal simulation time.
double minimal_analog_time(const Circuit& circuit, const NNChain& resource,
                           double t_f);

}  // namespace daqc
