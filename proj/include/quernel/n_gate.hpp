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

#include <Eigen/Dense>

#include "quernel/gates.hpp"

namespace quernel {

/// Exact matrix of N(alpha, beta, gamma) = exp[i(alpha XX + beta YY +
/// gamma ZZ)]. The three generators commute and square to the identity, so
/// the exponential is the product of the three factors
/// cos(t) I + i sin(t) P. Basis order: local index = bit(q1) + 2 bit(q2).
Eigen::Matrix4cd n_matrix(double alpha, double beta, double gamma);

/// Two-qubit circuit on qubits (0, 1) equal to N(alpha, beta, gamma) up to
/// a global phase of pi/4, using exactly three CNOTs plus RY/RZ rotations:
///
///   RZ(1, pi/2)
///   CNOT(0, 1)
///   RZ(0, -pi/2)  RY(0, -pi/2)  RZ(0, 2 beta)   RZ(1, pi/2)
///   CNOT(1, 0)
///   RZ(0, -2 alpha)  RY(0, pi/2)                RZ(1, -2 gamma)
///   CNOT(0, 1)
///
/// The angle mapping was obtained by reducing the commuting-exponential
/// form to a diagonal multiplexed rotation between CNOT conjugations and is
/// pinned by randomized equivalence tests against n_matrix.
Circuit n_decomposition(double alpha, double beta, double gamma);

/// Rewrites every TwoQubitN op into its three-CNOT form; other ops pass
/// through unchanged. The result is equal to the input up to a global phase.
Circuit expand_two_qubit_n(const Circuit &circuit);

}  // namespace quernel
