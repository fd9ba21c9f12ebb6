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

#include "quernel/gates.hpp"

namespace quernel {

/// Gate-level cost of a circuit. Counts are taken after every TwoQubitN is
/// expanded into its three-CNOT form; depth is the longest per-qubit
/// dependency chain with every gate counting 1.
struct ResourceReport {
  int num_qubits = 0;
  long depth = 0;
  long cnot_count = 0;
  long total_gates = 0;
};

ResourceReport resource_report(const Circuit &circuit);

}  // namespace quernel
