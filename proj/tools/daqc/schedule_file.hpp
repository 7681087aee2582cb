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

#include <string>
#include <string_view>

#include "daqc/circuit.hpp"
#include "daqc/problem.hpp"

namespace daqc::cli {

inline constexpr std::string_view kScheduleFormat = "daqc-schedule";

/**
 * Compiled schedule as written by `daqc compile`. The circuit holds only
 * single-qubit layers and resource blocks.
 */
struct ScheduleFile {
  std::string tool_version;
  std::string input_hash;
  double t_f = 0.0;
  ScheduleStats stats;
  Circuit circuit{2};

  bool operator==(const ScheduleFile&) const = default;
};

/// Fixed field order, one instruction per line, doubles with 17
/// significant digits.
std::string emit_schedule(const ScheduleFile& file);

/// Throws ParseError on malformed input.
ScheduleFile parse_schedule(std::string_view text);

/// Fixed-width "%.17g" rendering used by the emitter.
std::string format_double(double value);

/// "sha256:<hex>" of the given bytes.
std::string sha256_tag(std::string_view bytes);

}  // namespace daqc::cli
