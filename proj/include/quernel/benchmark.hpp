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
 * End-to-end pipeline: load -> split -> standardize -> optional PCA ->
 * angle scaling -> kernel matrices -> SMO -> metrics, repeated over runs
 * and kernels. Quantum kernels consume the angle-scaled features; classical
 * kernels consume the standardized/PCA features. Run r offsets every stage
 * seed by r.
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "quernel/config.hpp"
#include "quernel/metrics.hpp"
#include "quernel/resources.hpp"

namespace quernel {

struct RunRecord {
  int run = 0;
  std::uint64_t split_seed = 0;
  std::uint64_t kernel_seed = 0;
  std::uint64_t svm_seed = 0;
  std::string kernel;
  int train_size = 0;
  int test_size = 0;
  Metrics metrics;
  double wall_time_s = 0.0;
  bool svm_converged = true;
};

struct BenchmarkReport {
  std::string tool_version;
  nlohmann::json config_echo;
  std::map<std::string, ResourceReport> resources;  // quantum kernels only
  std::vector<RunRecord> records;

  bool all_converged() const;
  /// Full report including per-kernel mean/std aggregates.
  nlohmann::json to_json() const;
};

BenchmarkReport run_benchmark(const ExperimentConfig &config);

void write_report(const BenchmarkReport &report, const std::string &path);

/// File names used by the kernel subcommand and the precomputed-kernel
/// consumer: <prefix>_train.csv, <prefix>_cross.csv, <prefix>_meta.json.
struct KernelBundlePaths {
  std::string train_csv;
  std::string cross_csv;
  std::string meta_json;
};

KernelBundlePaths kernel_bundle_paths(const std::string &prefix);

/// Computes the run-0 train Gram and test-vs-train cross matrices once and
/// serializes them with their split so a benchmark can reuse them without
/// recomputation. Outputs are byte-stable for a fixed config.
void compute_kernel_bundle(const ExperimentConfig &config,
                           const std::string &prefix);

}  // namespace quernel
