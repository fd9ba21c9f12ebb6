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

// Command-line front end. Subcommands:
//   resources  -- qubit/depth/CNOT table per feature count
//   kernel     -- precompute train/cross kernel matrices for a config
//   benchmark  -- full pipeline, one report per config
//   ttest      -- paired t-tests between benchmark reports
//
// Exit codes: 0 ok, 2 config error, 3 data error, 4 numerical failure.
// QUERNEL_SEED overrides every config seed when set.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "quernel/benchmark.hpp"
#include "quernel/config.hpp"
#include "quernel/errors.hpp"
#include "quernel/feature_maps.hpp"
#include "quernel/resources.hpp"
#include "quernel/stats.hpp"
#include "quernel/version.hpp"

namespace {

using nlohmann::json;
using namespace quernel;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

std::optional<std::uint64_t> seed_override() {
  const char *env = std::getenv("QUERNEL_SEED");
  if (!env || !*env) return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size())
      throw std::invalid_argument("trailing characters");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception &) {
    throw ConfigError("QUERNEL_SEED must be a non-negative integer");
  }
}

ExperimentConfig load_config(const std::string &path) {
  ExperimentConfig cfg = ExperimentConfig::load(path);
  if (const auto seed = seed_override()) cfg.override_seeds(*seed);
  return cfg;
}

struct ResourceRow {
  int features, qubits;
  long depth, cnots, total;
};

int cmd_resources(const std::string &map_name, const std::string &range,
                  int reps, const std::string &out_path) {
  const MapKind kind = map_kind_from_string(map_name);
  int lo = 0, hi = 0;
  const auto dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(range);
    } else {
      lo = std::stoi(range.substr(0, dots));
      hi = std::stoi(range.substr(dots + 2));
    }
  } catch (const std::exception &) {
    throw ConfigError("bad --features range: " + range);
  }
  if (lo < 1 || hi < lo)
    throw ConfigError("feature range needs 1 <= A <= B");
  if (kind != MapKind::kCP && lo < 2 && kind == MapKind::kZZ)
    lo = std::max(lo, 2);

  MapSpec spec;
  spec.kind = kind;
  spec.reps = reps;
  std::vector<ResourceRow> rows;
  for (int f = lo; f <= hi; ++f) {
    if (kind == MapKind::kZZ && f < 2) continue;
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(f);
    const ResourceReport r = resource_report(build_map(zero, spec));
    rows.push_back({f, r.num_qubits, r.depth, r.cnot_count, r.total_gates});
  }

  const auto write_csv = [&](std::ostream &os) {
    os << "features,qubits,depth,cnot_count,total_gates\n";
    for (const auto &r : rows)
      os << r.features << ',' << r.qubits << ',' << r.depth << ',' << r.cnots
         << ',' << r.total << '\n';
  };
  if (out_path.empty()) {
    write_csv(std::cout);
  } else if (out_path.size() > 5 &&
             out_path.substr(out_path.size() - 5) == ".json") {
    json j = json::array();
    for (const auto &r : rows)
      j.push_back({{"features", r.features},
                   {"qubits", r.qubits},
                   {"depth", r.depth},
                   {"cnot_count", r.cnots},
                   {"total_gates", r.total}});
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write " + out_path);
    out << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write " + out_path);
    write_csv(out);
  }
  return kExitOk;
}

int cmd_kernel(const std::string &config_path, const std::string &prefix,
               int jobs) {
  ExperimentConfig cfg = load_config(config_path);
  if (jobs > 0) cfg.kernel.jobs = jobs;
  compute_kernel_bundle(cfg, prefix);
  const auto paths = kernel_bundle_paths(prefix);
  std::cout << "wrote " << paths.train_csv << ", " << paths.cross_csv << ", "
            << paths.meta_json << '\n';
  return kExitOk;
}

int cmd_benchmark(const std::string &config_path, const std::string &out_path,
                  int jobs) {
  ExperimentConfig cfg = load_config(config_path);
  if (jobs > 0) cfg.kernel.jobs = jobs;
  const BenchmarkReport report = run_benchmark(cfg);
  write_report(report, out_path);
  std::cout << "wrote " << out_path << '\n';
  const json summary = report.to_json();
  for (const auto &[kernel, agg] : summary.at("aggregates").items())
    std::cout << kernel << ": mcc " << agg.at("mcc").at("mean")
              << " accuracy " << agg.at("accuracy").at("mean") << '\n';
  if (!report.all_converged()) {
    std::cerr << "warning: SMO did not converge for at least one record\n";
    return kExitNumerical;
  }
  return kExitOk;
}

struct Series {
  std::string label;
  std::vector<double> values;
};

int cmd_ttest(const std::vector<std::string> &report_paths,
              const std::string &metric, const std::string &out_path) {
  static const std::set<std::string> metrics{"mcc", "accuracy", "precision",
                                             "recall", "f1"};
  if (!metrics.count(metric))
    throw ConfigError("unknown metric: " + metric);

  std::vector<Series> series;
  std::vector<std::vector<std::uint64_t>> seed_sets;
  for (const auto &path : report_paths) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open report: " + path);
    json j;
    try {
      in >> j;
    } catch (const json::exception &e) {
      throw DataError("bad report " + path + ": " + e.what());
    }
    const std::string stem = std::filesystem::path(path).stem().string();
    std::map<std::string, std::vector<double>> by_kernel;
    std::vector<std::uint64_t> seeds;
    for (const auto &rec : j.at("records")) {
      by_kernel[rec.at("kernel").get<std::string>()].push_back(
          rec.at(metric).get<double>());
      if (rec.at("kernel") == j.at("records")[0].at("kernel"))
        seeds.push_back(rec.at("split_seed").get<std::uint64_t>());
    }
    seed_sets.push_back(seeds);
    for (auto &[kernel, values] : by_kernel)
      series.push_back({report_paths.size() > 1 ? stem + ":" + kernel : kernel,
                        std::move(values)});
  }
  for (std::size_t i = 1; i < seed_sets.size(); ++i)
    if (seed_sets[i] != seed_sets[0])
      throw DataError("reports do not share run seeds/counts");
  if (series.size() < 2)
    throw DataError("need at least two metric series to compare");

  std::ostringstream table;
  table << "comparison,metric,t_statistic,p_value,dof,mean_diff\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    for (std::size_t k = i + 1; k < series.size(); ++k) {
      if (series[i].values.size() != series[k].values.size())
        throw DataError("series " + series[i].label + " and " +
                        series[k].label + " have different run counts");
      const TTestResult r = paired_t_test(series[i].values, series[k].values);
      table << series[i].label << " vs " << series[k].label << ',' << metric
            << ',' << r.t_statistic << ',' << r.p_value << ',' << r.dof << ','
            << r.mean_diff << '\n';
    }
  }
  if (out_path.empty()) {
    std::cout << table.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write " + out_path);
    out << table.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"quantum-kernel classification toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto *res = app.add_subcommand(
      "resources", "feature-map resource table over a feature range");
  std::string map_name = "cp", range = "2..30", out_path;
  int reps = 1;
  res->add_option("--map", map_name, "feature map: z | zz | cp");
  res->add_option("--features", range, "feature range A..B");
  res->add_option("--reps", reps, "map repetitions");
  res->add_option("--out", out_path, "output file (.csv or .json)");

  auto *ker = app.add_subcommand(
      "kernel", "precompute train/cross kernel matrices for a config");
  std::string ker_config, ker_prefix = "kernel";
  int ker_jobs = 0;
  ker->add_option("config", ker_config, "experiment config JSON")->required();
  ker->add_option("--out", ker_prefix, "output path prefix");
  ker->add_option("--jobs", ker_jobs, "worker threads");

  auto *bench =
      app.add_subcommand("benchmark", "run the classification pipeline");
  std::string bench_config, bench_out = "benchmark_report.json";
  int bench_jobs = 0;
  bench->add_option("config", bench_config, "experiment config JSON")
      ->required();
  bench->add_option("--out", bench_out, "report path");
  bench->add_option("--jobs", bench_jobs, "worker threads");

  auto *tt = app.add_subcommand(
      "ttest", "paired t-tests across benchmark reports");
  std::vector<std::string> tt_reports;
  std::string tt_metric = "mcc", tt_out;
  tt->add_option("reports", tt_reports, "benchmark report JSON files")
      ->required();
  tt->add_option("--metric", tt_metric, "metric to compare");
  tt->add_option("--out", tt_out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (res->parsed()) return cmd_resources(map_name, range, reps, out_path);
    if (ker->parsed()) return cmd_kernel(ker_config, ker_prefix, ker_jobs);
    if (bench->parsed())
      return cmd_benchmark(bench_config, bench_out, bench_jobs);
    if (tt->parsed()) return cmd_ttest(tt_reports, tt_metric, tt_out);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument &e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DataError &e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError &e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}
