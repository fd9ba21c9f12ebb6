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
 * Soft-margin C-SVM on a precomputed kernel, trained with simplified SMO
 * (random second index, seedable). The dual problem
 *
 *   max  sum(alpha) - 1/2 sum_ij alpha_i alpha_j y_i y_j K_ij
 *   s.t. 0 <= alpha_i <= C,  sum_i alpha_i y_i = 0
 *
 * is optimized by pairwise coordinate ascent until no KKT violation beyond
 * `tol` survives `max_passes` consecutive sweeps.
 */

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace quernel {

struct SVMParams {
  double c_box = 1.0;
  double tol = 1e-3;
  int max_passes = 10;
  long max_sweeps = 200000;  // hard cap; hitting it flags non-convergence
  std::uint64_t seed = 0;
  bool record_objective = false;
};

struct SVMModel {
  Eigen::VectorXd dual_coefs;  // alpha_i * y_i, one per training row
  double bias = 0.0;
  std::vector<int> support_indices;
  double c_box = 1.0;
  std::vector<int> train_refs;  // caller-supplied training identifiers
  bool converged = true;
  long sweeps = 0;
  std::vector<double> objective_trace;  // per sweep, when recording
};

/// Trains on a precomputed square kernel. Labels must be -1/+1 with both
/// classes present. Non-convergence (sweep cap) is reported through
/// model.converged, not an exception.
SVMModel svm_train(const Eigen::MatrixXd &kernel, const Eigen::VectorXi &labels,
                   const SVMParams &params = {});

/// Decision values for rows of a cross-kernel matrix whose columns align
/// with the training set.
Eigen::VectorXd svm_decision(const SVMModel &model,
                             const Eigen::MatrixXd &cross_kernel);

/// Signs of the decision values; an exact zero maps to +1.
Eigen::VectorXi svm_predict(const SVMModel &model,
                            const Eigen::MatrixXd &cross_kernel);

/// Dual objective at a given alpha (used by tests and the trace).
double svm_dual_objective(const Eigen::MatrixXd &kernel,
                          const Eigen::VectorXi &labels,
                          const Eigen::VectorXd &alpha);

}  // namespace quernel
