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

#include <stdexcept>
#include <string>

namespace daqc {

/// A slot asks for a nonzero ZZ angle but its resource coupling is zero.
class UnschedulableError : public std::runtime_error {
public:
  UnschedulableError(int slot, const std::string& message)
      : std::runtime_error(message), slot_(slot) {}

  [[nodiscard]] int slot() const { return slot_; }

private:
  int slot_;
};

/// The requested dense simulation exceeds the configured qubit cap.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace daqc
