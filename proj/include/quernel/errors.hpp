// Copyright 2026 The Quernel Authors
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

namespace quernel {

/// Bad experiment configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

/// Bad or inconsistent input data (CLI exit code 3).
struct DataError : std::runtime_error {
  explicit DataError(const std::string &what) : std::runtime_error(what) {}
};

/// Numerical failure such as non-convergence or a degenerate statistic
/// (CLI exit code 4).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string &what)
      : std::runtime_error(what) {}
};

}  // namespace quernel
