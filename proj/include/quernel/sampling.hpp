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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "quernel/rng.hpp"
#include "quernel/statevector.hpp"

namespace quernel {

/// Computational-basis measurement tallies. Keys are bit strings with
/// qubit 0 written first (leftmost character).
struct OutcomeCounts {
  std::map<std::string, std::int64_t> counts;
  std::int64_t shots = 0;
};

/// Bit string for a basis-state index, qubit 0 first.
inline std::string bitstring(std::uint64_t index, int num_qubits) {
  std::string s(num_qubits, '0');
  for (int q = 0; q < num_qubits; ++q)
    if (index & (std::uint64_t{1} << q)) s[q] = '1';
  return s;
}

namespace detail {

/// Cumulative Born distribution; last entry forced to 1 so a draw in [0,1)
/// always lands.
template <typename Scalar>
std::vector<double> born_cumulative(const StateVector<Scalar> &state) {
  std::vector<double> cum(state.dim());
  double acc = 0.0;
  for (std::int64_t i = 0; i < state.dim(); ++i) {
    acc += static_cast<double>(std::norm(state.amplitudes()(i)));
    cum[i] = acc;
  }
  cum.back() = std::max(cum.back(), 1.0);
  return cum;
}

inline std::int64_t draw_index(const std::vector<double> &cum, Rng &rng) {
  const double u = rng.next_double();
  return std::upper_bound(cum.begin(), cum.end(), u) - cum.begin();
}

}  // namespace detail

/// Draws `shots` computational-basis samples from the Born distribution.
/// Deterministic for a fixed seed: one uniform draw per shot.
template <typename Scalar>
OutcomeCounts sample_counts(const StateVector<Scalar> &state,
                            std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  const auto cum = detail::born_cumulative(state);
  Rng rng(seed);
  std::vector<std::int64_t> tally(state.dim(), 0);
  for (std::int64_t s = 0; s < shots; ++s) ++tally[detail::draw_index(cum, rng)];
  OutcomeCounts out;
  out.shots = shots;
  for (std::int64_t i = 0; i < state.dim(); ++i)
    if (tally[i] > 0) out.counts[bitstring(i, state.num_qubits())] = tally[i];
  return out;
}

/// Shannon entropy in bits of the observed outcome frequencies.
inline double shannon_entropy(const OutcomeCounts &counts) {
  if (counts.shots < 1)
    throw std::invalid_argument("shannon_entropy: needs shots >= 1");
  double h = 0.0;
  for (const auto &[key, c] : counts.counts) {
    if (c <= 0) continue;
    const double p = static_cast<double>(c) / counts.shots;
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace quernel
