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

#include "quernel/benchmark.hpp"

#include <chrono>
#include <fstream>
#include <unordered_map>

#include "quernel/classical_kernels.hpp"
#include "quernel/errors.hpp"
#include "quernel/preprocess.hpp"
#include "quernel/stats.hpp"
#include "quernel/svm.hpp"
#include "quernel/version.hpp"

namespace quernel {

namespace {

using nlohmann::json;

Dataset load_dataset(const ExperimentConfig &config) {
  try {
    if (config.dataset.synthetic)
      return synthesize_gaussian(*config.dataset.synthetic);
    return load_csv(config.dataset.csv_path, config.dataset.label_column);
  } catch (const DataError &) {
    throw;
  } catch (const std::exception &e) {
    throw DataError(std::string("load stage: ") + e.what());
  }
}

bool is_quantum_kernel(const std::string &name) {
  return name == "z" || name == "zz" || name == "cp";
}

struct PreparedSplit {
  Dataset train, test;
  Eigen::MatrixXd classical_train, classical_test;  // standardized (+PCA)
  Eigen::MatrixXd quantum_train, quantum_test;      // angle-scaled
};

/// Preprocessing chain on an existing train/test split.
PreparedSplit preprocess_split(const ExperimentConfig &config, Dataset train,
                               Dataset test) {
  PreparedSplit out;
  out.train = std::move(train);
  out.test = std::move(test);
  try {
    Eigen::MatrixXd tr = out.train.features, te = out.test.features;
    if (config.preprocessing.standardize) {
      const Standardizer s = Standardizer::fit(tr);
      tr = s.transform(tr);
      te = s.transform(te);
    }
    const int k = config.preprocessing.pca_components;
    if (k > 0) {
      if (k > tr.cols())
        throw ConfigError("pca_components exceeds the feature count");
      const PCAModel pca = pca_fit(tr, k);
      tr = pca_transform(pca, tr);
      te = pca_transform(pca, te);
    }
    out.classical_train = tr;
    out.classical_test = te;
    if (config.preprocessing.angle_scale) {
      const AngleScaler sc = AngleScaler::fit(tr);
      out.quantum_train = sc.transform(tr);
      out.quantum_test = sc.transform(te);
    } else {
      out.quantum_train = tr;
      out.quantum_test = te;
    }
  } catch (const ConfigError &) {
    throw;
  } catch (const std::exception &e) {
    throw DataError(std::string("preprocess stage: ") + e.what());
  }
  return out;
}

PreparedSplit prepare(const ExperimentConfig &config, const Dataset &data,
                      std::uint64_t split_seed) {
  try {
    auto [train, test] =
        config.split.stratified
            ? stratified_split(data, config.split.train_fraction, split_seed)
            : shuffled_split(data, config.split.train_fraction, split_seed);
    return preprocess_split(config, std::move(train), std::move(test));
  } catch (const DataError &) {
    throw;
  } catch (const ConfigError &) {
    throw;
  } catch (const std::exception &e) {
    throw DataError(std::string("split stage: ") + e.what());
  }
}

MapBuilder make_builder(const ExperimentConfig &config,
                        const std::string &kernel_name) {
  MapSpec spec = config.map;
  spec.kind = map_kind_from_string(kernel_name);
  return [spec](Eigen::Ref<const Eigen::VectorXd> x) {
    return build_map(x, spec);
  };
}

struct KernelMatrices {
  Eigen::MatrixXd train;
  Eigen::MatrixXd cross;
};

KernelMatrices compute_matrices(const ExperimentConfig &config,
                                const PreparedSplit &split,
                                const std::string &kernel_name,
                                std::uint64_t kernel_seed) {
  KernelMatrices out;
  if (is_quantum_kernel(kernel_name)) {
    KernelConfig kcfg = config.kernel;
    kcfg.seed = kernel_seed;
    const MapBuilder builder = make_builder(config, kernel_name);
    out.train = kernel_matrix(split.quantum_train, builder, kcfg);
    out.cross = cross_kernel(split.quantum_train, split.quantum_test, builder,
                             kcfg);
  } else {
    const auto kind = classical_kernel_from_string(kernel_name);
    out.train = classical_gram(split.classical_train, kind);
    out.cross =
        classical_cross(split.classical_train, split.classical_test, kind);
  }
  return out;
}

int map_feature_dim(const ExperimentConfig &config, const Dataset &data) {
  const int d = static_cast<int>(data.features.cols());
  const int k = config.preprocessing.pca_components;
  return k > 0 && k <= d ? k : d;
}

}  // namespace

bool BenchmarkReport::all_converged() const {
  for (const auto &r : records)
    if (!r.svm_converged) return false;
  return true;
}

json BenchmarkReport::to_json() const {
  json j;
  j["tool_version"] = tool_version;
  j["config"] = config_echo;
  json jres = json::object();
  for (const auto &[name, r] : resources)
    jres[name] = {{"num_qubits", r.num_qubits},
                  {"depth", r.depth},
                  {"cnot_count", r.cnot_count},
                  {"total_gates", r.total_gates}};
  j["resources"] = jres;
  json jrecords = json::array();
  std::map<std::string, std::map<std::string, std::vector<double>>> series;
  for (const auto &r : records) {
    jrecords.push_back({{"run", r.run},
                        {"split_seed", r.split_seed},
                        {"kernel_seed", r.kernel_seed},
                        {"svm_seed", r.svm_seed},
                        {"kernel", r.kernel},
                        {"train_size", r.train_size},
                        {"test_size", r.test_size},
                        {"mcc", r.metrics.mcc},
                        {"accuracy", r.metrics.accuracy},
                        {"precision", r.metrics.precision},
                        {"recall", r.metrics.recall},
                        {"f1", r.metrics.f1},
                        {"wall_time_s", r.wall_time_s},
                        {"svm_converged", r.svm_converged}});
    auto &per_kernel = series[r.kernel];
    per_kernel["mcc"].push_back(r.metrics.mcc);
    per_kernel["accuracy"].push_back(r.metrics.accuracy);
    per_kernel["precision"].push_back(r.metrics.precision);
    per_kernel["recall"].push_back(r.metrics.recall);
    per_kernel["f1"].push_back(r.metrics.f1);
  }
  j["records"] = jrecords;
  json jagg = json::object();
  for (const auto &[kernel, metrics] : series) {
    json jm = json::object();
    for (const auto &[metric, values] : metrics) {
      double mean = 0, sd = 0;
      if (values.size() >= 2) {
        const MeanStd ms = mean_std(values);
        mean = ms.mean;
        sd = ms.std;
      } else {
        mean = values.front();
      }
      jm[metric] = {{"mean", mean}, {"std", sd}};
    }
    jagg[kernel] = jm;
  }
  j["aggregates"] = jagg;
  return j;
}

void write_report(const BenchmarkReport &report, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write report: " + path);
  out << report.to_json().dump(2) << '\n';
}

KernelBundlePaths kernel_bundle_paths(const std::string &prefix) {
  return {prefix + "_train.csv", prefix + "_cross.csv", prefix + "_meta.json"};
}

namespace {

/// Loads a precomputed bundle and reconstructs the split it was built from.
struct LoadedBundle {
  std::vector<int> train_ids, test_ids;
  Eigen::MatrixXd train, cross;
  std::string map_kind;
};

LoadedBundle load_bundle(const std::string &prefix) {
  const KernelBundlePaths paths = kernel_bundle_paths(prefix);
  LoadedBundle b;
  b.train = read_kernel_csv(paths.train_csv);
  b.cross = read_kernel_csv(paths.cross_csv);
  std::ifstream in(paths.meta_json);
  if (!in) throw DataError("cannot open kernel metadata: " + paths.meta_json);
  json meta;
  try {
    in >> meta;
  } catch (const json::exception &e) {
    throw DataError("bad kernel metadata: " + std::string(e.what()));
  }
  b.train_ids = meta.at("train_ids").get<std::vector<int>>();
  b.test_ids = meta.at("test_ids").get<std::vector<int>>();
  b.map_kind = meta.at("map_kind").get<std::string>();
  if (b.train.rows() != static_cast<Eigen::Index>(b.train_ids.size()) ||
      b.cross.rows() != static_cast<Eigen::Index>(b.test_ids.size()) ||
      b.cross.cols() != b.train.rows())
    throw DataError("kernel bundle shapes do not match its metadata");
  return b;
}

std::vector<int> indices_for_ids(const Dataset &data,
                                 const std::vector<int> &ids) {
  std::unordered_map<int, int> where;
  for (Eigen::Index i = 0; i < data.size(); ++i)
    where[data.row_ids[i]] = static_cast<int>(i);
  std::vector<int> idx;
  idx.reserve(ids.size());
  for (int id : ids) {
    const auto it = where.find(id);
    if (it == where.end())
      throw DataError("kernel bundle row id " + std::to_string(id) +
                      " not present in the dataset");
    idx.push_back(it->second);
  }
  return idx;
}

}  // namespace

BenchmarkReport run_benchmark(const ExperimentConfig &config) {
  BenchmarkReport report;
  report.tool_version = kVersion;
  report.config_echo = config.to_json();

  const Dataset data = load_dataset(config);
  const int dim = map_feature_dim(config, data);
  for (const auto &name : config.kernels) {
    if (!is_quantum_kernel(name)) continue;
    MapSpec spec = config.map;
    spec.kind = map_kind_from_string(name);
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(dim);
    report.resources[name] = resource_report(build_map(zero, spec));
  }

  const bool use_bundle = !config.precomputed_kernel.empty();
  LoadedBundle bundle;
  if (use_bundle) {
    if (config.runs != 1)
      throw ConfigError("precomputed_kernel requires runs = 1");
    bundle = load_bundle(config.precomputed_kernel);
  }

  for (int run = 0; run < config.runs; ++run) {
    const std::uint64_t split_seed = config.split.seed + run;
    const std::uint64_t kernel_seed = config.kernel.seed + run;
    const std::uint64_t svm_seed = config.svm.seed + run;

    const PreparedSplit split =
        use_bundle
            ? preprocess_split(config,
                               data.subset(indices_for_ids(data,
                                                           bundle.train_ids)),
                               data.subset(indices_for_ids(data,
                                                           bundle.test_ids)))
            : prepare(config, data, split_seed);

    for (const auto &kernel_name : config.kernels) {
      const auto t0 = std::chrono::steady_clock::now();
      KernelMatrices km;
      try {
        if (use_bundle && kernel_name == bundle.map_kind) {
          km.train = bundle.train;
          km.cross = bundle.cross;
        } else {
          km = compute_matrices(config, split, kernel_name, kernel_seed);
        }
      } catch (const std::exception &e) {
        throw NumericalError("kernel stage (" + kernel_name + "): " +
                             e.what());
      }

      SVMParams params{.c_box = config.svm.c_box,
                       .tol = config.svm.tol,
                       .max_passes = config.svm.max_passes,
                       .seed = svm_seed};
      SVMModel model;
      Eigen::VectorXi pred;
      try {
        model = svm_train(km.train, split.train.labels, params);
        pred = svm_predict(model, km.cross);
      } catch (const std::exception &e) {
        throw DataError("svm stage (" + kernel_name + "): " + e.what());
      }
      const Metrics metrics = compute_metrics(confusion(split.test.labels, pred));
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();

      report.records.push_back(
          {.run = run,
           .split_seed = split_seed,
           .kernel_seed = kernel_seed,
           .svm_seed = svm_seed,
           .kernel = kernel_name,
           .train_size = static_cast<int>(split.train.size()),
           .test_size = static_cast<int>(split.test.size()),
           .metrics = metrics,
           .wall_time_s = secs,
           .svm_converged = model.converged});
    }
  }
  return report;
}

void compute_kernel_bundle(const ExperimentConfig &config,
                           const std::string &prefix) {
  if (!is_quantum_kernel(to_string(config.map.kind)))
    throw ConfigError("kernel bundle needs a quantum map kind");
  const Dataset data = load_dataset(config);
  const PreparedSplit split = prepare(config, data, config.split.seed);

  KernelConfig kcfg = config.kernel;
  const MapBuilder builder = make_builder(config, to_string(config.map.kind));
  const Eigen::MatrixXd train =
      kernel_matrix(split.quantum_train, builder, kcfg);
  const Eigen::MatrixXd cross =
      cross_kernel(split.quantum_train, split.quantum_test, builder, kcfg);

  const KernelBundlePaths paths = kernel_bundle_paths(prefix);
  write_kernel_csv(paths.train_csv, train, split.train.row_ids,
                   split.train.row_ids);
  write_kernel_csv(paths.cross_csv, cross, split.test.row_ids,
                   split.train.row_ids);
  json meta;
  meta["tool_version"] = kVersion;
  meta["config"] = config.to_json();
  meta["map_kind"] = to_string(config.map.kind);
  meta["mode"] = to_string(config.kernel.mode);
  meta["shots"] = config.kernel.shots;
  meta["seed"] = config.kernel.seed;
  meta["train_ids"] = split.train.row_ids;
  meta["test_ids"] = split.test.row_ids;
  std::ofstream out(paths.meta_json);
  if (!out) throw DataError("cannot write kernel metadata: " + paths.meta_json);
  out << meta.dump(2) << '\n';
}

}  // namespace quernel
