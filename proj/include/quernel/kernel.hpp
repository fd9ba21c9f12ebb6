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
 * Fidelity-kernel engine: k(x, y) = |<Phi(x)|Phi(y)>|^2.
 *
 * Exact mode simulates one state per sample and assembles the Gram matrix
 * from inner products. Sampled modes (shots/noisy) run the inversion test:
 * the compound circuit U(y)^dag U(x) on |0...0> and the estimated
 * probability of the all-zeros outcome. Each unordered pair is evaluated
 * once with a per-entry seed derived from (seed, i, j), so results are
 * independent of evaluation order and worker count. Sampled entries are
 * clamped to [0, 1] and the diagonal is pinned to the exact self-fidelity
 * of 1.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "quernel/gates.hpp"
#include "quernel/noise.hpp"

namespace quernel {

enum class KernelMode { kExact, kShots, kNoisy };

KernelMode kernel_mode_from_string(const std::string &name);
std::string to_string(KernelMode mode);

struct KernelConfig {
  KernelMode mode = KernelMode::kExact;
  std::int64_t shots = 0;  // required >= 1 in shots/noisy modes
  NoiseModel noise;        // used in noisy mode
  std::uint64_t seed = 0;
  int jobs = 1;  // worker threads for matrix assembly

  void validate() const;
};

using MapBuilder = std::function<Circuit(Eigen::Ref<const Eigen::VectorXd>)>;

/// Single kernel value for a pair of feature vectors.
double kernel_entry(Eigen::Ref<const Eigen::VectorXd> x,
                    Eigen::Ref<const Eigen::VectorXd> y,
                    const MapBuilder &builder, const KernelConfig &cfg);

/// Symmetric Gram matrix over the rows of X.
Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd &x_rows,
                              const MapBuilder &builder,
                              const KernelConfig &cfg);

/// Rectangular matrix k(test_i, train_j); rows follow X_test.
Eigen::MatrixXd cross_kernel(const Eigen::MatrixXd &x_train,
                             const Eigen::MatrixXd &x_test,
                             const MapBuilder &builder,
                             const KernelConfig &cfg);

/// CSV layout: header "id,<col ids...>", then one row per sample starting
/// with its id. Values are printed with round-trip precision so a rerun is
/// byte-identical.
void write_kernel_csv(const std::string &path, const Eigen::MatrixXd &m,
                      const std::vector<int> &row_ids,
                      const std::vector<int> &col_ids);

Eigen::MatrixXd read_kernel_csv(const std::string &path);

}  // namespace quernel
