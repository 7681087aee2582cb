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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "daqc/graph.hpp"

namespace daqc::cli {

/// Malformed or unreadable input file.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct AtaCoupling {
  int i = 0;
  int j = 0;
  double value = 0.0;
};

/// All-to-all target: couplings g'_ij, angle g'_ij * t_f per edge.
struct AtaTarget {
  std::vector<AtaCoupling> couplings;
};

/// Nearest-neighbour target given directly as per-slot angles (radians).
struct NnTarget {
  std::vector<double> angles;
};

/**
 * Compilation problem read from JSON:
 *
 *   {"num_qubits": 4,
 *    "resource_couplings": [1.0, 0.8, 1.2],
 *    "target": {"type": "ata", "couplings": [{"i": 0, "j": 2, "value": 0.5}]},
 *    "t_f": 0.3}
 *
 * or with "target": {"type": "nn", "angles": [...]}. Indices are 0-based
 * with i < j; unknown fields are rejected.
 */
struct ProblemSpec {
  int num_qubits = 0;
  std::vector<double> resource_couplings;
  std::variant<AtaTarget, NnTarget> target;
  double t_f = 0.0;

  [[nodiscard]] NNChain resource() const;
  [[nodiscard]] bool is_ata() const {
    return std::holds_alternative<AtaTarget>(target);
  }
  /// ATA couplings as a graph; for NN targets, angles / t_f on chain edges.
  [[nodiscard]] CouplingGraph target_graph() const;
};

ProblemSpec parse_problem(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace daqc::cli
