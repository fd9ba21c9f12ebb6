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

#include "quernel/kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "quernel/errors.hpp"
#include "quernel/rng.hpp"
#include "quernel/statevector.hpp"

namespace quernel {

KernelMode kernel_mode_from_string(const std::string &name) {
  if (name == "exact") return KernelMode::kExact;
  if (name == "shots") return KernelMode::kShots;
  if (name == "noisy") return KernelMode::kNoisy;
  throw std::invalid_argument("unknown kernel mode: " + name);
}

std::string to_string(KernelMode mode) {
  switch (mode) {
    case KernelMode::kExact:
      return "exact";
    case KernelMode::kShots:
      return "shots";
    case KernelMode::kNoisy:
      return "noisy";
  }
  return "?";
}

void KernelConfig::validate() const {
  if (mode != KernelMode::kExact && shots < 1)
    throw std::invalid_argument("sampled kernel modes need shots >= 1");
  noise.validate();
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

namespace {

Circuit inversion_circuit(Eigen::Ref<const Eigen::VectorXd> x,
                          Eigen::Ref<const Eigen::VectorXd> y,
                          const MapBuilder &builder) {
  Circuit c = builder(x);
  c.append(builder(y).adjoint());
  return c;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

/// Shot estimate of the all-zeros probability: the exact value from the
/// compound statevector, resampled as `shots` Bernoulli draws.
double sampled_zero_probability(const Circuit &compound, std::int64_t shots,
                                std::uint64_t seed) {
  const auto state = simulate(compound);
  const double p0 = std::norm(state.amplitudes()(0));
  Rng rng(seed);
  std::int64_t hits = 0;
  for (std::int64_t s = 0; s < shots; ++s)
    if (rng.bernoulli(p0)) ++hits;
  return static_cast<double>(hits) / shots;
}

double noisy_zero_probability(const Circuit &compound, const NoiseModel &noise,
                              std::int64_t shots, std::uint64_t seed) {
  const OutcomeCounts counts = simulate_noisy(compound, noise, shots, seed);
  const std::string zeros(compound.num_qubits, '0');
  const auto it = counts.counts.find(zeros);
  const std::int64_t hits = it == counts.counts.end() ? 0 : it->second;
  return static_cast<double>(hits) / shots;
}

double sampled_entry(Eigen::Ref<const Eigen::VectorXd> x,
                     Eigen::Ref<const Eigen::VectorXd> y,
                     const MapBuilder &builder, const KernelConfig &cfg,
                     std::uint64_t entry_seed) {
  const Circuit compound = inversion_circuit(x, y, builder);
  const double p = cfg.mode == KernelMode::kShots
                       ? sampled_zero_probability(compound, cfg.shots,
                                                  entry_seed)
                       : noisy_zero_probability(compound, cfg.noise,
                                                cfg.shots, entry_seed);
  return clamp01(p);
}

/// Runs fn(k) for k in [0, count) across cfg.jobs workers.
void parallel_for(int jobs, std::int64_t count,
                  const std::function<void(std::int64_t)> &fn) {
  if (jobs <= 1 || count < 2) {
    for (std::int64_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> workers;
  const int n = std::min<int>(jobs, static_cast<int>(count));
  workers.reserve(n);
  for (int w = 0; w < n; ++w) {
    workers.emplace_back([&] {
      for (std::int64_t k = next.fetch_add(1); k < count;
           k = next.fetch_add(1))
        fn(k);
    });
  }
  for (auto &t : workers) t.join();
}

/// All states simulated once, stacked as matrix columns.
Eigen::MatrixXcd simulate_states(const Eigen::MatrixXd &x_rows,
                                 const MapBuilder &builder, int jobs) {
  const auto first = simulate(builder(x_rows.row(0)));
  Eigen::MatrixXcd states(first.dim(), x_rows.rows());
  states.col(0) = first.amplitudes();
  parallel_for(jobs, x_rows.rows() - 1, [&](std::int64_t k) {
    states.col(k + 1) = simulate(builder(x_rows.row(k + 1))).amplitudes();
  });
  return states;
}

void check_uniform_width(const Eigen::MatrixXd &x) {
  if (x.rows() == 0 || x.cols() == 0)
    throw std::invalid_argument("kernel input must be non-empty");
}

}  // namespace

double kernel_entry(Eigen::Ref<const Eigen::VectorXd> x,
                    Eigen::Ref<const Eigen::VectorXd> y,
                    const MapBuilder &builder, const KernelConfig &cfg) {
  cfg.validate();
  if (x.size() != y.size())
    throw std::invalid_argument("kernel_entry: feature length mismatch");
  if (cfg.mode == KernelMode::kExact) {
    const auto sx = simulate(builder(x));
    const auto sy = simulate(builder(y));
    return clamp01(std::norm(inner_product(sy, sx)));
  }
  return sampled_entry(x, y, builder, cfg, derive_seed(cfg.seed, 0, 0));
}

Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd &x_rows,
                              const MapBuilder &builder,
                              const KernelConfig &cfg) {
  cfg.validate();
  check_uniform_width(x_rows);
  const Eigen::Index m = x_rows.rows();
  Eigen::MatrixXd gram(m, m);

  if (cfg.mode == KernelMode::kExact) {
    const Eigen::MatrixXcd states = simulate_states(x_rows, builder, cfg.jobs);
    gram = (states.adjoint() * states).cwiseAbs2();
    gram = gram.cwiseMin(1.0).cwiseMax(0.0);
  } else {
    // unordered pairs i < j, one evaluation each
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    gram.setZero();
    parallel_for(cfg.jobs, static_cast<std::int64_t>(pairs.size()),
                 [&](std::int64_t k) {
                   const auto [i, j] = pairs[k];
                   const double v =
                       sampled_entry(x_rows.row(i), x_rows.row(j), builder,
                                     cfg, derive_seed(cfg.seed, i, j));
                   gram(i, j) = v;
                   gram(j, i) = v;
                 });
  }
  gram.diagonal().setOnes();  // exact self-fidelity
  return gram;
}

Eigen::MatrixXd cross_kernel(const Eigen::MatrixXd &x_train,
                             const Eigen::MatrixXd &x_test,
                             const MapBuilder &builder,
                             const KernelConfig &cfg) {
  cfg.validate();
  check_uniform_width(x_train);
  check_uniform_width(x_test);
  if (x_train.cols() != x_test.cols())
    throw std::invalid_argument("cross_kernel: feature length mismatch");

  if (cfg.mode == KernelMode::kExact) {
    const Eigen::MatrixXcd train = simulate_states(x_train, builder, cfg.jobs);
    const Eigen::MatrixXcd test = simulate_states(x_test, builder, cfg.jobs);
    Eigen::MatrixXd k = (test.adjoint() * train).cwiseAbs2();
    return k.cwiseMin(1.0).cwiseMax(0.0);
  }

  Eigen::MatrixXd k(x_test.rows(), x_train.rows());
  parallel_for(cfg.jobs, x_test.rows() * x_train.rows(), [&](std::int64_t idx) {
    const int i = static_cast<int>(idx / x_train.rows());
    const int j = static_cast<int>(idx % x_train.rows());
    k(i, j) = sampled_entry(x_test.row(i), x_train.row(j), builder, cfg,
                            derive_seed(cfg.seed, i, j));
  });
  return k;
}

void write_kernel_csv(const std::string &path, const Eigen::MatrixXd &m,
                      const std::vector<int> &row_ids,
                      const std::vector<int> &col_ids) {
  if (static_cast<Eigen::Index>(row_ids.size()) != m.rows() ||
      static_cast<Eigen::Index>(col_ids.size()) != m.cols())
    throw std::invalid_argument("write_kernel_csv: id count mismatch");
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path);
  out << "id";
  for (int id : col_ids) out << ',' << id;
  out << '\n';
  char buf[40];
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << row_ids[i];
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      out << ',' << buf;
    }
    out << '\n';
  }
}

Eigen::MatrixXd read_kernel_csv(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open kernel file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty kernel file: " + path);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::getline(ss, cell, ',');  // row id
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("kernel file has no rows: " + path);
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw DataError("ragged kernel file: " + path);
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace quernel
