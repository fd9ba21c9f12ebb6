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
 * Monte-Carlo Pauli-trajectory noise. TwoQubitN ops are expanded to their
 * three-CNOT form first, so two-qubit depolarizing events attach to the
 * entangling gates that would run on hardware.
 *
 * Per-shot draw order (fixed; this is the determinism contract): for each
 * gate, one Bernoulli(p) draw when the matching p is nonzero, then one
 * uniform index draw if an error fires; one uniform draw for the
 * measurement outcome; one Bernoulli(readout_flip) per qubit, qubit 0
 * first, when readout_flip is nonzero.
 */

#pragma once

#include <cstdint>
#include <stdexcept>

#include "quernel/sampling.hpp"

namespace quernel {

struct NoiseModel {
  double p1 = 0.0;            // depolarizing prob. after each 1-qubit gate
  double p2 = 0.0;            // depolarizing prob. after each 2-qubit gate
  double readout_flip = 0.0;  // independent per-qubit bit flip at readout

  bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && readout_flip == 0.0; }

  void validate() const {
    for (double p : {p1, p2, readout_flip})
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("noise probabilities must be in [0, 1]");
  }
};

namespace detail {

template <typename Scalar>
void apply_pauli(StateVector<Scalar> &state, int q, int which) {
  using C = std::complex<Scalar>;
  auto &v = state.amplitudes();
  const std::int64_t mask = std::int64_t{1} << q;
  const std::int64_t dim = state.dim();
  switch (which) {
    case 1:  // X
      for (std::int64_t i = 0; i < dim; ++i)
        if (!(i & mask)) std::swap(v(i), v(i | mask));
      break;
    case 2:  // Y
      for (std::int64_t i = 0; i < dim; ++i)
        if (!(i & mask)) {
          const C a0 = v(i), a1 = v(i | mask);
          v(i) = C(0, -1) * a1;
          v(i | mask) = C(0, 1) * a0;
        }
      break;
    case 3:  // Z
      for (std::int64_t i = 0; i < dim; ++i)
        if (i & mask) v(i) = -v(i);
      break;
    default:
      break;  // identity
  }
}

}  // namespace detail

/// One Pauli trajectory per shot; see the file comment for the RNG
/// contract. With an all-zero model this reduces to Born sampling of the
/// exact state.
template <typename Scalar = double>
OutcomeCounts simulate_noisy(const Circuit &circuit, const NoiseModel &noise,
                             std::int64_t shots, std::uint64_t seed) {
  noise.validate();
  if (shots < 1)
    throw std::invalid_argument("simulate_noisy: shots must be >= 1");
  circuit.validate();
  const Circuit expanded = expand_two_qubit_n(circuit);
  const int n = expanded.num_qubits;
  Rng rng(seed);
  std::vector<std::int64_t> tally(std::int64_t{1} << n, 0);

  const bool gate_noise = noise.p1 > 0.0 || noise.p2 > 0.0;
  StateVector<Scalar> state(n);
  std::vector<double> cum;
  if (!gate_noise) {
    state = simulate<Scalar>(expanded);
    cum = detail::born_cumulative(state);
  }

  for (std::int64_t s = 0; s < shots; ++s) {
    if (gate_noise) {
      auto &v = state.amplitudes();
      v.setZero();
      v(0) = std::complex<Scalar>(1, 0);
      for (const GateOp &g : expanded.ops) {
        apply_gate(state, g);
        if (g.is_two_qubit()) {
          if (noise.p2 > 0.0 && rng.bernoulli(noise.p2)) {
            // uniform non-identity two-qubit Pauli: index 1..15 encodes
            // (pauli on q0) * 4 + (pauli on q1)
            const int c = 1 + static_cast<int>(rng.uniform_int(15));
            detail::apply_pauli(state, g.q0, c >> 2);
            detail::apply_pauli(state, g.q1, c & 3);
          }
        } else if (noise.p1 > 0.0 && rng.bernoulli(noise.p1)) {
          detail::apply_pauli(state, g.q0,
                              1 + static_cast<int>(rng.uniform_int(3)));
        }
      }
      cum = detail::born_cumulative(state);
    }
    std::int64_t outcome = detail::draw_index(cum, rng);
    if (noise.readout_flip > 0.0) {
      for (int q = 0; q < n; ++q)
        if (rng.bernoulli(noise.readout_flip)) outcome ^= std::int64_t{1} << q;
    }
    ++tally[outcome];
  }

  OutcomeCounts out;
  out.shots = shots;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(tally.size()); ++i)
    if (tally[i] > 0) out.counts[bitstring(i, n)] = tally[i];
  return out;
}

}  // namespace quernel
