// Copyright 2026 The xyquench Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace xyq {

/// Invalid user input: model parameters, grid specs, config keys.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that cannot produce a trustworthy number (overflow,
/// aliasing, gap closing on the grid, failed internal cross-check).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a Bogoliubov angle is requested exactly at a gap-closing point.
class GaplessModeError : public NumericError {
 public:
  GaplessModeError() : NumericError("gapless mode") {}
  explicit GaplessModeError(const std::string& where)
      : NumericError("gapless mode: " + where) {}
};

}  // namespace xyq
