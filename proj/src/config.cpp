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

#include "quernel/config.hpp"

#include <fstream>
#include <set>

#include "quernel/classical_kernels.hpp"
#include "quernel/errors.hpp"
#include "quernel/rng.hpp"

namespace quernel {

namespace {

using nlohmann::json;

void require_object(const json &j, const std::string &what) {
  if (!j.is_object()) throw ConfigError(what + " must be a JSON object");
}

template <typename T>
T get_or(const json &j, const std::string &key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &e) {
    throw ConfigError("bad value for '" + key + "': " + e.what());
  }
}

std::array<double, 3> get_angles(const json &j, const std::string &key,
                                 std::array<double, 3> fallback) {
  if (!j.contains(key)) return fallback;
  const auto v = j.at(key);
  if (!v.is_array() || v.size() != 3)
    throw ConfigError("'" + key + "' must be an array of 3 angles");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const json &j) {
  require_object(j, "config");
  static const std::set<std::string> known{
      "dataset", "preprocessing", "map",     "kernel",
      "svm",     "split",         "runs",    "kernels",
      "precomputed_kernel"};
  for (const auto &[key, value] : j.items())
    if (!known.count(key)) throw ConfigError("unknown config key: " + key);

  ExperimentConfig cfg;
  if (!j.contains("dataset")) throw ConfigError("config needs a 'dataset'");
  const json &jd = j.at("dataset");
  require_object(jd, "dataset");
  if (jd.contains("synthetic")) {
    const json &js = jd.at("synthetic");
    require_object(js, "dataset.synthetic");
    SyntheticSpec spec;
    spec.num_samples = get_or(js, "num_samples", spec.num_samples);
    spec.num_features = get_or(js, "num_features", spec.num_features);
    spec.separation = get_or(js, "separation", spec.separation);
    spec.seed = get_or(js, "seed", spec.seed);
    cfg.dataset.synthetic = spec;
  } else {
    cfg.dataset.csv_path = get_or<std::string>(jd, "path", "");
    cfg.dataset.label_column = get_or<std::string>(jd, "label_column", "");
    if (cfg.dataset.csv_path.empty() || cfg.dataset.label_column.empty())
      throw ConfigError("dataset needs 'path' and 'label_column' or 'synthetic'");
  }

  if (j.contains("preprocessing")) {
    const json &jp = j.at("preprocessing");
    require_object(jp, "preprocessing");
    cfg.preprocessing.standardize =
        get_or(jp, "standardize", cfg.preprocessing.standardize);
    cfg.preprocessing.pca_components =
        get_or(jp, "pca_components", cfg.preprocessing.pca_components);
    cfg.preprocessing.angle_scale =
        get_or(jp, "angle_scale", cfg.preprocessing.angle_scale);
    if (cfg.preprocessing.pca_components < 0)
      throw ConfigError("pca_components must be >= 0");
  }

  if (j.contains("map")) {
    const json &jm = j.at("map");
    require_object(jm, "map");
    cfg.map.kind = map_kind_from_string(get_or<std::string>(jm, "kind", "cp"));
    cfg.map.reps = get_or(jm, "reps", cfg.map.reps);
    if (cfg.map.reps < 1) throw ConfigError("map.reps must be >= 1");
    cfg.map.cp.conv_angles =
        get_angles(jm, "conv_angles", cfg.map.cp.conv_angles);
    cfg.map.cp.pool_angles =
        get_angles(jm, "pool_angles", cfg.map.cp.pool_angles);
    const std::string ent =
        get_or<std::string>(jm, "zz_entanglement", "full");
    if (ent == "full")
      cfg.map.zz.entanglement = Entanglement::kFull;
    else if (ent == "linear")
      cfg.map.zz.entanglement = Entanglement::kLinear;
    else
      throw ConfigError("zz_entanglement must be 'full' or 'linear'");
  }

  if (j.contains("kernel")) {
    const json &jk = j.at("kernel");
    require_object(jk, "kernel");
    cfg.kernel.mode =
        kernel_mode_from_string(get_or<std::string>(jk, "mode", "exact"));
    cfg.kernel.shots = get_or<std::int64_t>(jk, "shots", cfg.kernel.shots);
    cfg.kernel.seed = get_or(jk, "seed", cfg.kernel.seed);
    cfg.kernel.jobs = get_or(jk, "jobs", cfg.kernel.jobs);
    if (jk.contains("noise")) {
      const json &jn = jk.at("noise");
      require_object(jn, "kernel.noise");
      cfg.kernel.noise.p1 = get_or(jn, "p1", 0.0);
      cfg.kernel.noise.p2 = get_or(jn, "p2", 0.0);
      cfg.kernel.noise.readout_flip = get_or(jn, "readout_flip", 0.0);
    }
    try {
      cfg.kernel.validate();
    } catch (const std::exception &e) {
      throw ConfigError(std::string("kernel config: ") + e.what());
    }
  }

  if (j.contains("svm")) {
    const json &js = j.at("svm");
    require_object(js, "svm");
    cfg.svm.c_box = get_or(js, "C", cfg.svm.c_box);
    cfg.svm.tol = get_or(js, "tol", cfg.svm.tol);
    cfg.svm.max_passes = get_or(js, "max_passes", cfg.svm.max_passes);
    cfg.svm.seed = get_or(js, "seed", cfg.svm.seed);
    if (cfg.svm.c_box <= 0 || cfg.svm.tol <= 0 || cfg.svm.max_passes < 1)
      throw ConfigError("svm config: C, tol must be > 0 and max_passes >= 1");
  }

  if (j.contains("split")) {
    const json &js = j.at("split");
    require_object(js, "split");
    cfg.split.train_fraction =
        get_or(js, "train_fraction", cfg.split.train_fraction);
    cfg.split.stratified = get_or(js, "stratified", cfg.split.stratified);
    cfg.split.seed = get_or(js, "seed", cfg.split.seed);
    if (!(cfg.split.train_fraction > 0 && cfg.split.train_fraction < 1))
      throw ConfigError("split.train_fraction must be in (0, 1)");
  }

  cfg.runs = get_or(j, "runs", cfg.runs);
  if (cfg.runs < 1) throw ConfigError("runs must be >= 1");
  cfg.kernels = get_or(j, "kernels", std::vector<std::string>{});
  if (cfg.kernels.empty()) cfg.kernels = {to_string(cfg.map.kind)};
  for (const auto &name : cfg.kernels) {
    try {
      (void)map_kind_from_string(name);
    } catch (const std::invalid_argument &) {
      try {
        (void)classical_kernel_from_string(name);
      } catch (const std::invalid_argument &) {
        throw ConfigError("unknown kernel in 'kernels': " + name);
      }
    }
  }
  cfg.precomputed_kernel =
      get_or<std::string>(j, "precomputed_kernel", "");
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception &e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json ExperimentConfig::to_json() const {
  json j;
  if (dataset.synthetic) {
    j["dataset"]["synthetic"] = {
        {"num_samples", dataset.synthetic->num_samples},
        {"num_features", dataset.synthetic->num_features},
        {"separation", dataset.synthetic->separation},
        {"seed", dataset.synthetic->seed}};
  } else {
    j["dataset"] = {{"path", dataset.csv_path},
                    {"label_column", dataset.label_column}};
  }
  j["preprocessing"] = {{"standardize", preprocessing.standardize},
                        {"pca_components", preprocessing.pca_components},
                        {"angle_scale", preprocessing.angle_scale}};
  j["map"] = {{"kind", to_string(map.kind)},
              {"reps", map.reps},
              {"conv_angles", map.cp.conv_angles},
              {"pool_angles", map.cp.pool_angles},
              {"zz_entanglement",
               map.zz.entanglement == Entanglement::kFull ? "full" : "linear"}};
  j["kernel"] = {{"mode", to_string(kernel.mode)},
                 {"shots", kernel.shots},
                 {"seed", kernel.seed},
                 {"jobs", kernel.jobs},
                 {"noise",
                  {{"p1", kernel.noise.p1},
                   {"p2", kernel.noise.p2},
                   {"readout_flip", kernel.noise.readout_flip}}}};
  j["svm"] = {{"C", svm.c_box},
              {"tol", svm.tol},
              {"max_passes", svm.max_passes},
              {"seed", svm.seed}};
  j["split"] = {{"train_fraction", split.train_fraction},
                {"stratified", split.stratified},
                {"seed", split.seed}};
  j["runs"] = runs;
  j["kernels"] = kernels;
  if (!precomputed_kernel.empty())
    j["precomputed_kernel"] = precomputed_kernel;
  return j;
}

void ExperimentConfig::override_seeds(std::uint64_t master) {
  split.seed = derive_seed(master, 1);
  kernel.seed = derive_seed(master, 2);
  svm.seed = derive_seed(master, 3);
  if (dataset.synthetic) dataset.synthetic->seed = derive_seed(master, 4);
}

}  // namespace quernel
