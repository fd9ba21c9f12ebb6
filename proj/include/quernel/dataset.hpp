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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quernel {

/// Binary-labeled feature matrix. Labels are -1/+1; the two original label
/// values are mapped by lexicographic order (smaller -> -1) and retained in
/// label_names.
struct Dataset {
  Eigen::MatrixXd features;
  Eigen::VectorXi labels;
  std::vector<std::string> feature_names;
  std::vector<std::string> label_names;  // [name of -1, name of +1]
  std::vector<int> row_ids;              // provenance into the source table
  int dropped_rows = 0;

  Eigen::Index size() const { return features.rows(); }
  Dataset subset(const std::vector<int> &row_indices) const;
};

/// Loads a comma-separated file with a header row. All non-label columns
/// must be numeric; rows with missing cells (empty, "na", "nan") are
/// dropped and counted. Exactly two distinct label values are required.
Dataset load_csv(const std::string &path, const std::string &label_column);

/// Per-class proportions preserved within one sample; per-class training
/// counts are clamped so both sides keep at least one sample of each class.
/// Deterministic for a fixed seed.
std::pair<Dataset, Dataset> stratified_split(const Dataset &dataset,
                                             double train_fraction,
                                             std::uint64_t seed);

/// Plain shuffled split without class balancing.
std::pair<Dataset, Dataset> shuffled_split(const Dataset &dataset,
                                           double train_fraction,
                                           std::uint64_t seed);

struct SyntheticSpec {
  int num_samples = 100;
  int num_features = 7;
  double separation = 6.0;  // class-mean distance in per-feature std units
  std::uint64_t seed = 0;
};

/// Two isotropic unit-variance Gaussian classes with means +-(sep/2) u for
/// a random unit vector u; balanced classes (the +1 class gets the extra
/// sample when the total is odd).
Dataset synthesize_gaussian(const SyntheticSpec &spec);

}  // namespace quernel
