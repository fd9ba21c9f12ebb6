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
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace quernel {

enum class GateKind : std::uint8_t {
  kHadamard,
  kRotZ,      // RZ(t) = diag(e^{-it/2}, e^{it/2})
  kRotY,      // RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
  kCnot,      // flips target when control is 1
  kTwoQubitN  // exp[i(alpha XX + beta YY + gamma ZZ)] on (q0, q1)
};

/// One gate of a circuit. Qubit 0 is the least-significant bit of the
/// basis-state index everywhere in this library.
struct GateOp {
  GateKind kind = GateKind::kHadamard;
  int q0 = 0;       // target qubit; control for CNOT; first qubit for N
  int q1 = -1;      // CNOT target / second qubit for N
  double alpha = 0.0;  // rotation angle for RotZ/RotY
  double beta = 0.0;
  double gamma = 0.0;

  static GateOp hadamard(int q) { return {GateKind::kHadamard, q}; }
  static GateOp rot_z(int q, double angle) {
    return {GateKind::kRotZ, q, -1, angle};
  }
  static GateOp rot_y(int q, double angle) {
    return {GateKind::kRotY, q, -1, angle};
  }
  static GateOp cnot(int control, int target) {
    return {GateKind::kCnot, control, target};
  }
  static GateOp two_qubit_n(int q1, int q2, double alpha, double beta,
                            double gamma) {
    return {GateKind::kTwoQubitN, q1, q2, alpha, beta, gamma};
  }

  bool is_two_qubit() const {
    return kind == GateKind::kCnot || kind == GateKind::kTwoQubitN;
  }

  double angle() const { return alpha; }

  /// The gate with the inverse unitary. Self-inverse kinds are unchanged.
  GateOp adjoint() const {
    GateOp g = *this;
    switch (kind) {
      case GateKind::kHadamard:
      case GateKind::kCnot:
        break;
      case GateKind::kRotZ:
      case GateKind::kRotY:
        g.alpha = -alpha;
        break;
      case GateKind::kTwoQubitN:
        g.alpha = -alpha;
        g.beta = -beta;
        g.gamma = -gamma;
        break;
    }
    return g;
  }

  bool operator==(const GateOp &) const = default;
};

inline Eigen::Matrix2cd hadamard_matrix() {
  Eigen::Matrix2cd m;
  const double s = 1.0 / std::sqrt(2.0);
  m << s, s, s, -s;
  return m;
}

inline Eigen::Matrix2cd rot_z_matrix(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(std::complex<double>(0, -theta / 2));
  m(1, 1) = std::exp(std::complex<double>(0, theta / 2));
  return m;
}

inline Eigen::Matrix2cd rot_y_matrix(double theta) {
  Eigen::Matrix2cd m;
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  m << c, -s, s, c;
  return m;
}

/// An ordered gate sequence over a fixed qubit register.
struct Circuit {
  int num_qubits = 0;
  std::vector<GateOp> ops;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {}

  void add(const GateOp &g) { ops.push_back(g); }

  /// Throws std::invalid_argument / std::out_of_range when an op references
  /// a qubit outside the register, repeats a qubit, or has a non-finite
  /// angle.
  void validate() const {
    if (num_qubits < 1) throw std::invalid_argument("circuit needs >= 1 qubit");
    for (const GateOp &g : ops) {
      if (g.q0 < 0 || g.q0 >= num_qubits)
        throw std::out_of_range("gate qubit index out of range");
      if (g.is_two_qubit()) {
        if (g.q1 < 0 || g.q1 >= num_qubits)
          throw std::out_of_range("gate qubit index out of range");
        if (g.q0 == g.q1)
          throw std::invalid_argument("two-qubit gate needs distinct qubits");
      }
      if (!std::isfinite(g.alpha) || !std::isfinite(g.beta) ||
          !std::isfinite(g.gamma))
        throw std::invalid_argument("gate angle is not finite");
    }
  }

  /// Inverse circuit: gates reversed and individually inverted.
  Circuit adjoint() const {
    Circuit inv(num_qubits);
    inv.ops.reserve(ops.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
      inv.ops.push_back(it->adjoint());
    return inv;
  }

  /// Appends another circuit acting on the same register.
  void append(const Circuit &other) {
    if (other.num_qubits != num_qubits)
      throw std::invalid_argument("circuit size mismatch in append");
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
  }

  bool operator==(const Circuit &) const = default;
};

}  // namespace quernel
