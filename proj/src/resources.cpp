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

#include "quernel/resources.hpp"

#include <algorithm>
#include <vector>

#include "quernel/n_gate.hpp"

namespace quernel {

ResourceReport resource_report(const Circuit &circuit) {
  circuit.validate();
  const Circuit expanded = expand_two_qubit_n(circuit);
  ResourceReport report;
  report.num_qubits = expanded.num_qubits;
  report.total_gates = static_cast<long>(expanded.ops.size());
  std::vector<long> qubit_depth(expanded.num_qubits, 0);
  for (const GateOp &g : expanded.ops) {
    if (g.kind == GateKind::kCnot) ++report.cnot_count;
    long d = qubit_depth[g.q0];
    if (g.is_two_qubit()) d = std::max(d, qubit_depth[g.q1]);
    ++d;
    qubit_depth[g.q0] = d;
    if (g.is_two_qubit()) qubit_depth[g.q1] = d;
    report.depth = std::max(report.depth, d);
  }
  return report;
}

}  // namespace quernel
