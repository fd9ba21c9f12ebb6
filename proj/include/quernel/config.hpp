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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quernel/dataset.hpp"
#include "quernel/feature_maps.hpp"
#include "quernel/kernel.hpp"

namespace quernel {

struct DatasetSource {
  std::string csv_path;      // used when synthetic is absent
  std::string label_column;
  std::optional<SyntheticSpec> synthetic;
};

struct PreprocessConfig {
  bool standardize = true;
  int pca_components = 0;  // 0 disables PCA
  bool angle_scale = true;
};

struct SplitConfig {
  double train_fraction = 0.8;
  bool stratified = true;
  std::uint64_t seed = 0;
};

struct SVMConfig {
  double c_box = 1.0;
  double tol = 1e-3;
  int max_passes = 10;
  std::uint64_t seed = 0;
};

/// One experiment: dataset, preprocessing, feature map, kernel mode, SVM
/// hyperparameters, split protocol, repetition count, and the list of
/// kernels to benchmark ("z", "zz", "cp", "linear", "poly", "rbf",
/// "sigmoid"). Run r offsets every stage seed by r.
struct ExperimentConfig {
  DatasetSource dataset;
  PreprocessConfig preprocessing;
  MapSpec map;
  KernelConfig kernel;
  SVMConfig svm;
  SplitConfig split;
  int runs = 1;
  std::vector<std::string> kernels;       // default: the map kind only
  std::string precomputed_kernel;         // optional path prefix

  static ExperimentConfig from_json(const nlohmann::json &j);
  static ExperimentConfig load(const std::string &path);
  nlohmann::json to_json() const;

  /// Replaces every stage seed with one derived from `master`
  /// (QUERNEL_SEED override).
  void override_seeds(std::uint64_t master);
};

}  // namespace quernel
