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

#include "quernel/feature_maps.hpp"

#include <cmath>
#include <stdexcept>

namespace quernel {

int capacity(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("capacity: need >= 1 qubit");
  int total = 0;
  int term = num_qubits;
  while (true) {
    total += term;
    if (term == 1) break;
    term /= 2;
  }
  return total;
}

int qubits_required(int num_features) {
  if (num_features < 1)
    throw std::invalid_argument("qubits_required: need >= 1 feature");
  int n = 1;
  while (capacity(n) < num_features) ++n;
  return n;
}

long meta_fibonacci(int n) {
  if (n < 1) throw std::invalid_argument("meta_fibonacci: need N >= 1");
  std::vector<long> a(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    if (k <= 2) {
      a[k] = 1;
      continue;
    }
    const long i1 = k - a[k - 1];
    const long i2 = k - 1 - a[k - 2];
    if (i1 < 1 || i2 < 1 || i1 >= k || i2 >= k)
      throw std::logic_error("meta_fibonacci: recursion left the valid range");
    a[k] = a[i1] + a[i2];
  }
  return a[n];
}

namespace {

std::vector<std::pair<int, int>> brick_conv_pairs(const std::vector<int> &q) {
  const int k = static_cast<int>(q.size());
  std::vector<std::pair<int, int>> pairs;
  if (k < 2) return pairs;
  for (int i = 0; i + 1 < k; i += 2) pairs.emplace_back(q[i], q[i + 1]);
  for (int i = 1; i + 1 < k; i += 2) pairs.emplace_back(q[i], q[i + 1]);
  if (k >= 4 && k % 2 == 0) pairs.emplace_back(q[k - 1], q[0]);
  return pairs;
}

}  // namespace

LayerPlan plan_cp_layers(int num_features) {
  if (num_features < 1)
    throw std::invalid_argument("plan_cp_layers: need >= 1 feature");
  LayerPlan plan;
  plan.num_features = num_features;
  plan.num_qubits = qubits_required(num_features);

  std::vector<int> active(plan.num_qubits);
  for (int i = 0; i < plan.num_qubits; ++i) active[i] = i;

  int next_feature = 0;
  while (next_feature < num_features) {
    LayerPlan::Layer layer;
    layer.active_qubits = active;
    const int take = std::min<int>(static_cast<int>(active.size()),
                                   num_features - next_feature);
    for (int i = 0; i < take; ++i) layer.features.push_back(next_feature++);

    const bool more_features = next_feature < num_features;
    if (more_features) {
      layer.conv_pairs = brick_conv_pairs(active);
      std::vector<int> kept, retired;
      for (std::size_t i = 0; i + 1 < active.size(); i += 2) {
        layer.pool_pairs.emplace_back(active[i], active[i + 1]);
        retired.push_back(active[i]);
        kept.push_back(active[i + 1]);
      }
      if (active.size() % 2 == 1) retired.push_back(active.back());
      layer.kept_qubits = kept;
      layer.retired_qubits = retired;
      plan.layers.push_back(std::move(layer));
      active = kept;
    } else {
      plan.layers.push_back(std::move(layer));
      break;
    }
  }
  return plan;
}

namespace {

void check_features(Eigen::Ref<const Eigen::VectorXd> x, int min_len,
                    const char *who) {
  if (x.size() < min_len)
    throw std::invalid_argument(std::string(who) + ": too few features");
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!std::isfinite(x(i)))
      throw std::invalid_argument(std::string(who) + ": non-finite feature");
}

}  // namespace

Circuit build_z_map(Eigen::Ref<const Eigen::VectorXd> x, int reps) {
  check_features(x, 1, "build_z_map");
  if (reps < 1) throw std::invalid_argument("build_z_map: reps must be >= 1");
  const int n = static_cast<int>(x.size());
  Circuit c(n);
  for (int r = 0; r < reps; ++r) {
    for (int q = 0; q < n; ++q) c.add(GateOp::hadamard(q));
    for (int q = 0; q < n; ++q) c.add(GateOp::rot_z(q, 2.0 * x(q)));
  }
  return c;
}

Circuit build_zz_map(Eigen::Ref<const Eigen::VectorXd> x,
                     const ZZMapConfig &cfg) {
  check_features(x, 2, "build_zz_map");
  if (cfg.reps < 1)
    throw std::invalid_argument("build_zz_map: reps must be >= 1");
  const int n = static_cast<int>(x.size());
  constexpr double pi = std::numbers::pi;
  Circuit c(n);
  for (int r = 0; r < cfg.reps; ++r) {
    for (int q = 0; q < n; ++q) c.add(GateOp::hadamard(q));
    for (int q = 0; q < n; ++q) c.add(GateOp::rot_z(q, 2.0 * x(q)));
    auto entangle = [&](int i, int j) {
      c.add(GateOp::cnot(i, j));
      c.add(GateOp::rot_z(j, 2.0 * (pi - x(i)) * (pi - x(j))));
      c.add(GateOp::cnot(i, j));
    };
    if (cfg.entanglement == Entanglement::kFull) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) entangle(i, j);
    } else {
      for (int i = 0; i + 1 < n; ++i) entangle(i, i + 1);
    }
  }
  return c;
}

Circuit build_cp_map(Eigen::Ref<const Eigen::VectorXd> x,
                     const CPMapParams &params) {
  check_features(x, 1, "build_cp_map");
  if (params.reps < 1)
    throw std::invalid_argument("build_cp_map: reps must be >= 1");
  const LayerPlan plan = plan_cp_layers(static_cast<int>(x.size()));
  Circuit c(plan.num_qubits);
  const auto &[ca, cb, cg] = params.conv_angles;
  const auto &[pa, pb, pg] = params.pool_angles;
  for (int r = 0; r < params.reps; ++r) {
    for (const auto &layer : plan.layers) {
      for (std::size_t i = 0; i < layer.features.size(); ++i) {
        const int q = layer.active_qubits[i];
        c.add(GateOp::hadamard(q));
        c.add(GateOp::rot_z(q, 2.0 * x(layer.features[i])));
      }
      for (const auto &[a, b] : layer.conv_pairs)
        c.add(GateOp::two_qubit_n(a, b, ca, cb, cg));
      for (const auto &[a, b] : layer.pool_pairs)
        c.add(GateOp::two_qubit_n(a, b, pa, pb, pg));
    }
  }
  return c;
}

MapKind map_kind_from_string(const std::string &name) {
  if (name == "z") return MapKind::kZ;
  if (name == "zz") return MapKind::kZZ;
  if (name == "cp") return MapKind::kCP;
  throw std::invalid_argument("unknown feature map: " + name);
}

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::kZ:
      return "z";
    case MapKind::kZZ:
      return "zz";
    case MapKind::kCP:
      return "cp";
  }
  return "?";
}

Circuit build_map(Eigen::Ref<const Eigen::VectorXd> x, const MapSpec &spec) {
  switch (spec.kind) {
    case MapKind::kZ:
      return build_z_map(x, spec.reps);
    case MapKind::kZZ: {
      ZZMapConfig cfg = spec.zz;
      cfg.reps = spec.reps;
      return build_zz_map(x, cfg);
    }
    case MapKind::kCP: {
      CPMapParams p = spec.cp;
      p.reps = spec.reps;
      return build_cp_map(x, p);
    }
  }
  throw std::logic_error("build_map: unreachable");
}

int map_qubits(MapKind kind, int num_features) {
  if (num_features < 1)
    throw std::invalid_argument("map_qubits: need >= 1 feature");
  return kind == MapKind::kCP ? qubits_required(num_features) : num_features;
}

}  // namespace quernel
