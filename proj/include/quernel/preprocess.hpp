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
#include <vector>

namespace quernel {

/// Column-wise zero mean, unit variance (population convention: divide by
/// m). Constant columns are flagged and mapped to zero.
struct Standardizer {
  Eigen::VectorXd means;
  Eigen::VectorXd stds;  // 1.0 for constant columns
  std::vector<bool> constant;

  static Standardizer fit(const Eigen::MatrixXd &x);
  Eigen::MatrixXd transform(const Eigen::MatrixXd &x) const;
};

/// fit + transform in one call.
Eigen::MatrixXd standardize_fit_transform(const Eigen::MatrixXd &x,
                                          Standardizer *out = nullptr);

struct PCAModel {
  Eigen::VectorXd means;
  Eigen::MatrixXd components;          // k x d, orthonormal rows
  Eigen::VectorXd explained_variance;  // length k, nonincreasing
};

/// Top-k eigenvectors of the sample covariance (divide by m - 1). Each
/// component's sign is fixed so its largest-magnitude element is positive.
PCAModel pca_fit(const Eigen::MatrixXd &x, int k);

Eigen::MatrixXd pca_transform(const PCAModel &model, const Eigen::MatrixXd &x);

/// Column-wise min-max map onto [0, pi], fitted on the training split;
/// transform clamps out-of-range values. Constant columns map to pi/2.
struct AngleScaler {
  Eigen::VectorXd mins;
  Eigen::VectorXd maxs;

  static AngleScaler fit(const Eigen::MatrixXd &x);
  Eigen::MatrixXd transform(const Eigen::MatrixXd &x) const;
};

}  // namespace quernel
