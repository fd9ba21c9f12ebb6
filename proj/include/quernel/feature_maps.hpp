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
 * Data-encoding circuits. Three families:
 *
 *  - Z map: per repetition, H then RZ(2 x_i) on every qubit; one qubit per
 *    feature, no entanglement.
 *  - ZZ map: the Z map plus, per qubit pair (i, j), the interaction phase
 *    2 (pi - x_i)(pi - x_j) applied on qubit j between a CNOT(i, j) pair.
 *  - CP map: a layered convolution/partition construction that re-uses
 *    qubits freed by each partition step to encode further features, so
 *    n qubits hold n + floor(n/2) + ... features. Entanglers are TwoQubitN
 *    gates (3 CNOTs each after decomposition), giving a CNOT count linear
 *    in the qubit count.
 *
 * Feature values are angles; callers are expected to scale data into
 * [0, pi] beforehand (see AngleScaler).
 */

#pragma once

#include <Eigen/Dense>
#include <array>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "quernel/gates.hpp"

namespace quernel {

/// Features a register of n qubits can hold under halving partitions:
/// n + floor(n/2) + floor(n/4') + ... down to (and including) the first
/// term equal to 1.
int capacity(int num_qubits);

/// Smallest n with capacity(n) >= num_features.
int qubits_required(int num_features);

/// Reference sequence a(N) = a(N - a(N-1)) + a(N-1 - a(N-2)),
/// a(1) = a(2) = 1. Exposed alongside qubits_required; the two disagree at
/// some N (e.g. N = 16), and qubits_required is what the builders use.
long meta_fibonacci(int n);

struct CPMapParams {
  std::array<double, 3> conv_angles{std::numbers::pi / 2, std::numbers::pi / 4,
                                    std::numbers::pi / 8};
  std::array<double, 3> pool_angles{std::numbers::pi / 3, std::numbers::pi / 5,
                                    std::numbers::pi / 7};
  int reps = 1;
};

enum class Entanglement { kFull, kLinear };

struct ZZMapConfig {
  int reps = 2;
  Entanglement entanglement = Entanglement::kFull;
};

/// Wiring plan for one repetition of the CP map.
struct LayerPlan {
  struct Layer {
    std::vector<int> active_qubits;
    std::vector<int> features;  // feature indices encoded in this layer
    std::vector<std::pair<int, int>> conv_pairs;
    std::vector<std::pair<int, int>> pool_pairs;
    std::vector<int> kept_qubits;     // second qubit of each pool pair
    std::vector<int> retired_qubits;  // first qubits plus any odd leftover
  };
  int num_qubits = 0;
  int num_features = 0;
  std::vector<Layer> layers;
};

/// Layered plan for `num_features` features on qubits_required(num_features)
/// qubits. Conv pairs follow a two-round brick pattern (even pairs, odd
/// pairs, wrap pair for even layer width >= 4); pool pairs are the adjacent
/// even pairs and keep their second qubit. A layer only convolves and pools
/// when features remain to encode afterwards; the terminal layer has no
/// pairs.
LayerPlan plan_cp_layers(int num_features);

Circuit build_z_map(Eigen::Ref<const Eigen::VectorXd> x, int reps);
Circuit build_zz_map(Eigen::Ref<const Eigen::VectorXd> x,
                     const ZZMapConfig &cfg);
Circuit build_cp_map(Eigen::Ref<const Eigen::VectorXd> x,
                     const CPMapParams &params);

enum class MapKind { kZ, kZZ, kCP };

MapKind map_kind_from_string(const std::string &name);
std::string to_string(MapKind kind);

/// Unified builder configuration used by the kernel engine and CLI.
struct MapSpec {
  MapKind kind = MapKind::kCP;
  int reps = 1;
  CPMapParams cp;
  ZZMapConfig zz;
};

Circuit build_map(Eigen::Ref<const Eigen::VectorXd> x, const MapSpec &spec);

/// Qubits a map uses for a given feature count (Z/ZZ: one per feature).
int map_qubits(MapKind kind, int num_features);

}  // namespace quernel
