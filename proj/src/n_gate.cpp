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

#include "quernel/n_gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quernel {

namespace {

Eigen::Matrix4cd pauli_xx() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = 1.0;
  return m;
}

Eigen::Matrix4cd pauli_yy() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 3) = m(3, 0) = -1.0;
  m(1, 2) = m(2, 1) = 1.0;
  return m;
}

Eigen::Matrix4cd pauli_zz() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(3, 3) = 1.0;
  m(1, 1) = m(2, 2) = -1.0;
  return m;
}

Eigen::Matrix4cd axis_exponential(double theta, const Eigen::Matrix4cd &p) {
  const std::complex<double> i(0.0, 1.0);
  return std::cos(theta) * Eigen::Matrix4cd::Identity() +
         i * std::sin(theta) * p;
}

}  // namespace

Eigen::Matrix4cd n_matrix(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma))
    throw std::invalid_argument("n_matrix: non-finite angle");
  return axis_exponential(alpha, pauli_xx()) *
         axis_exponential(beta, pauli_yy()) *
         axis_exponential(gamma, pauli_zz());
}

Circuit n_decomposition(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma))
    throw std::invalid_argument("n_decomposition: non-finite angle");
  constexpr double half_pi = std::numbers::pi / 2;
  Circuit c(2);
  c.add(GateOp::rot_z(1, half_pi));
  c.add(GateOp::cnot(0, 1));
  c.add(GateOp::rot_z(0, -half_pi));
  c.add(GateOp::rot_y(0, -half_pi));
  c.add(GateOp::rot_z(0, 2 * beta));
  c.add(GateOp::rot_z(1, half_pi));
  c.add(GateOp::cnot(1, 0));
  c.add(GateOp::rot_z(0, -2 * alpha));
  c.add(GateOp::rot_y(0, half_pi));
  c.add(GateOp::rot_z(1, -2 * gamma));
  c.add(GateOp::cnot(0, 1));
  return c;
}

Circuit expand_two_qubit_n(const Circuit &circuit) {
  Circuit out(circuit.num_qubits);
  out.ops.reserve(circuit.ops.size());
  for (const GateOp &g : circuit.ops) {
    if (g.kind != GateKind::kTwoQubitN) {
      out.add(g);
      continue;
    }
    const Circuit local = n_decomposition(g.alpha, g.beta, g.gamma);
    const int map[2] = {g.q0, g.q1};
    for (GateOp h : local.ops) {
      h.q0 = map[h.q0];
      if (h.q1 >= 0) h.q1 = map[h.q1];
      out.add(h);
    }
  }
  return out;
}

}  // namespace quernel
