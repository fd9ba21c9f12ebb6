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

/**
 * @file
 * Dense state-vector simulation. Qubit 0 is the least-significant bit of
 * the basis-state index; a register of n qubits holds 2^n amplitudes.
 */

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "quernel/gates.hpp"
#include "quernel/n_gate.hpp"

namespace quernel {

template <typename Scalar = double>
class StateVector {
 public:
  using Complex = std::complex<Scalar>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1)
      throw std::invalid_argument("state needs >= 1 qubit");
    if (num_qubits > 30)
      throw std::invalid_argument("state too large to simulate densely");
    amps_ = Vector::Zero(std::int64_t{1} << num_qubits);
    amps_(0) = Complex(1, 0);
  }

  static StateVector from_amplitudes(int num_qubits, Vector amplitudes) {
    StateVector s(num_qubits);
    if (amplitudes.size() != s.dim())
      throw std::invalid_argument("amplitude vector has wrong length");
    s.amps_ = std::move(amplitudes);
    return s;
  }

  int num_qubits() const { return num_qubits_; }
  std::int64_t dim() const { return amps_.size(); }
  const Vector &amplitudes() const { return amps_; }
  Vector &amplitudes() { return amps_; }
  Scalar norm() const { return amps_.norm(); }

 private:
  int num_qubits_;
  Vector amps_;
};

namespace detail {

template <typename Scalar>
void check_qubit(const StateVector<Scalar> &state, int q) {
  if (q < 0 || q >= state.num_qubits())
    throw std::out_of_range("qubit index out of range");
}

}  // namespace detail

/// Applies a 2x2 unitary to one qubit, in place.
template <typename Scalar>
void apply_single_qubit(StateVector<Scalar> &state, int q,
                        const Eigen::Matrix2<std::complex<Scalar>> &u) {
  detail::check_qubit(state, q);
  auto &v = state.amplitudes();
  const std::int64_t mask = std::int64_t{1} << q;
  const std::int64_t dim = state.dim();
  for (std::int64_t base = 0; base < dim; base += 2 * mask) {
    for (std::int64_t i = base; i < base + mask; ++i) {
      const auto a0 = v(i), a1 = v(i | mask);
      v(i) = u(0, 0) * a0 + u(0, 1) * a1;
      v(i | mask) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
}

template <typename Scalar>
void apply_hadamard(StateVector<Scalar> &state, int q) {
  apply_single_qubit(state, q,
                     hadamard_matrix().cast<std::complex<Scalar>>().eval());
}

template <typename Scalar>
void apply_rot_z(StateVector<Scalar> &state, int q, double theta) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("rot_z: non-finite angle");
  apply_single_qubit(
      state, q, rot_z_matrix(theta).cast<std::complex<Scalar>>().eval());
}

template <typename Scalar>
void apply_rot_y(StateVector<Scalar> &state, int q, double theta) {
  if (!std::isfinite(theta))
    throw std::invalid_argument("rot_y: non-finite angle");
  apply_single_qubit(
      state, q, rot_y_matrix(theta).cast<std::complex<Scalar>>().eval());
}

template <typename Scalar>
void apply_cnot(StateVector<Scalar> &state, int control, int target) {
  detail::check_qubit(state, control);
  detail::check_qubit(state, target);
  if (control == target)
    throw std::invalid_argument("cnot needs distinct qubits");
  auto &v = state.amplitudes();
  const std::int64_t cmask = std::int64_t{1} << control;
  const std::int64_t tmask = std::int64_t{1} << target;
  const std::int64_t dim = state.dim();
  for (std::int64_t i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(v(i), v(i | tmask));
  }
}

/// Applies a 4x4 unitary to qubits (q1, q2); the local two-qubit index is
/// bit(q1) + 2 bit(q2).
template <typename Scalar>
void apply_two_qubit(StateVector<Scalar> &state, int q1, int q2,
                     const Eigen::Matrix4<std::complex<Scalar>> &u) {
  detail::check_qubit(state, q1);
  detail::check_qubit(state, q2);
  if (q1 == q2)
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  auto &v = state.amplitudes();
  const std::int64_t m1 = std::int64_t{1} << q1;
  const std::int64_t m2 = std::int64_t{1} << q2;
  const std::int64_t lo = std::min(m1, m2), hi = std::max(m1, m2);
  const std::int64_t count = state.dim() / 4;
  for (std::int64_t k = 0; k < count; ++k) {
    // expand k to an index with zeros at both gate bits
    std::int64_t i = k;
    i = (i & (lo - 1)) | ((i & ~(lo - 1)) << 1);
    i = (i & (hi - 1)) | ((i & ~(hi - 1)) << 1);
    const std::int64_t i00 = i, i01 = i | m1, i10 = i | m2, i11 = i | m1 | m2;
    const auto a0 = v(i00), a1 = v(i01), a2 = v(i10), a3 = v(i11);
    v(i00) = u(0, 0) * a0 + u(0, 1) * a1 + u(0, 2) * a2 + u(0, 3) * a3;
    v(i01) = u(1, 0) * a0 + u(1, 1) * a1 + u(1, 2) * a2 + u(1, 3) * a3;
    v(i10) = u(2, 0) * a0 + u(2, 1) * a1 + u(2, 2) * a2 + u(2, 3) * a3;
    v(i11) = u(3, 0) * a0 + u(3, 1) * a1 + u(3, 2) * a2 + u(3, 3) * a3;
  }
}

template <typename Scalar>
void apply_gate(StateVector<Scalar> &state, const GateOp &g) {
  switch (g.kind) {
    case GateKind::kHadamard:
      apply_hadamard(state, g.q0);
      break;
    case GateKind::kRotZ:
      apply_rot_z(state, g.q0, g.alpha);
      break;
    case GateKind::kRotY:
      apply_rot_y(state, g.q0, g.alpha);
      break;
    case GateKind::kCnot:
      apply_cnot(state, g.q0, g.q1);
      break;
    case GateKind::kTwoQubitN:
      apply_two_qubit(
          state, g.q0, g.q1,
          n_matrix(g.alpha, g.beta, g.gamma).cast<std::complex<Scalar>>().eval());
      break;
  }
}

/// Runs the circuit on |0...0>.
template <typename Scalar = double>
StateVector<Scalar> simulate(const Circuit &circuit) {
  circuit.validate();
  StateVector<Scalar> state(circuit.num_qubits);
  for (const GateOp &g : circuit.ops) apply_gate(state, g);
  return state;
}

/// <a|b> with conjugation on `a`.
template <typename Scalar>
std::complex<Scalar> inner_product(const StateVector<Scalar> &a,
                                   const StateVector<Scalar> &b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("inner_product: dimension mismatch");
  return a.amplitudes().dot(b.amplitudes());
}

}  // namespace quernel
