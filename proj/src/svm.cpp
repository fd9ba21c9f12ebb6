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

#include "quernel/svm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "quernel/rng.hpp"

namespace quernel {

double svm_dual_objective(const Eigen::MatrixXd &kernel,
                          const Eigen::VectorXi &labels,
                          const Eigen::VectorXd &alpha) {
  const Eigen::VectorXd ay =
      alpha.array() * labels.cast<double>().array();
  return alpha.sum() - 0.5 * ay.dot(kernel * ay);
}

SVMModel svm_train(const Eigen::MatrixXd &kernel,
                   const Eigen::VectorXi &labels, const SVMParams &params) {
  const Eigen::Index m = kernel.rows();
  if (kernel.cols() != m)
    throw std::invalid_argument("svm_train: kernel must be square");
  if (labels.size() != m)
    throw std::invalid_argument("svm_train: label count mismatch");
  if (params.c_box <= 0) throw std::invalid_argument("svm_train: C must be > 0");
  bool pos = false, neg = false;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (labels(i) == 1) pos = true;
    else if (labels(i) == -1) neg = true;
    else throw std::invalid_argument("svm_train: labels must be -1 or +1");
  }
  if (!pos || !neg)
    throw std::invalid_argument("svm_train: both classes must be present");

  const double c_box = params.c_box;
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
  double b = 0.0;
  Rng rng(params.seed);

  const auto decision = [&](Eigen::Index i) {
    double f = b;
    for (Eigen::Index j = 0; j < m; ++j)
      f += alpha(j) * labels(j) * kernel(j, i);
    return f;
  };

  SVMModel model;
  long sweeps = 0;
  int passes = 0;
  while (passes < params.max_passes) {
    if (sweeps >= params.max_sweeps) {
      model.converged = false;
      break;
    }
    ++sweeps;
    int changed = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
      const double ei = decision(i) - labels(i);
      const bool violates = (labels(i) * ei < -params.tol && alpha(i) < c_box) ||
                            (labels(i) * ei > params.tol && alpha(i) > 0);
      if (!violates) continue;
      Eigen::Index j = i;
      while (j == i) j = static_cast<Eigen::Index>(rng.uniform_int(m));
      const double ej = decision(j) - labels(j);
      const double ai_old = alpha(i), aj_old = alpha(j);
      double lo, hi;
      if (labels(i) != labels(j)) {
        lo = std::max(0.0, aj_old - ai_old);
        hi = std::min(c_box, c_box + aj_old - ai_old);
      } else {
        lo = std::max(0.0, ai_old + aj_old - c_box);
        hi = std::min(c_box, ai_old + aj_old);
      }
      if (lo >= hi) continue;
      const double eta = 2.0 * kernel(i, j) - kernel(i, i) - kernel(j, j);
      if (eta >= 0) continue;
      double aj = aj_old - labels(j) * (ei - ej) / eta;
      aj = std::clamp(aj, lo, hi);
      if (std::abs(aj - aj_old) < 1e-12) continue;
      const double ai =
          ai_old + labels(i) * labels(j) * (aj_old - aj);
      alpha(i) = ai;
      alpha(j) = aj;
      const double b1 = b - ei - labels(i) * (ai - ai_old) * kernel(i, i) -
                        labels(j) * (aj - aj_old) * kernel(i, j);
      const double b2 = b - ej - labels(i) * (ai - ai_old) * kernel(i, j) -
                        labels(j) * (aj - aj_old) * kernel(j, j);
      if (ai > 0 && ai < c_box)
        b = b1;
      else if (aj > 0 && aj < c_box)
        b = b2;
      else
        b = (b1 + b2) / 2.0;
      ++changed;
    }
    passes = changed == 0 ? passes + 1 : 0;
    if (params.record_objective)
      model.objective_trace.push_back(svm_dual_objective(kernel, labels, alpha));
  }

  // final bias from the KKT conditions: free support vectors satisfy
  // y_i = sum_j alpha_j y_j K_ji + b exactly at the optimum
  double bias_sum = 0.0;
  int bias_count = 0;
  double lo_margin = -std::numeric_limits<double>::infinity();
  double hi_margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m; ++i) {
    double f = 0.0;
    for (Eigen::Index j = 0; j < m; ++j)
      f += alpha(j) * labels(j) * kernel(j, i);
    const double r = labels(i) - f;
    if (alpha(i) > 1e-10 && alpha(i) < c_box - 1e-10) {
      bias_sum += r;
      ++bias_count;
    } else if ((labels(i) == 1 && alpha(i) <= 1e-10) ||
               (labels(i) == -1 && alpha(i) >= c_box - 1e-10)) {
      hi_margin = std::min(hi_margin, r);  // b <= r
    } else {
      lo_margin = std::max(lo_margin, r);  // b >= r
    }
  }
  if (bias_count > 0)
    b = bias_sum / bias_count;
  else if (std::isfinite(lo_margin) && std::isfinite(hi_margin))
    b = (lo_margin + hi_margin) / 2.0;

  model.dual_coefs = alpha.array() * labels.cast<double>().array();
  model.bias = b;
  model.c_box = c_box;
  model.sweeps = sweeps;
  model.train_refs.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) model.train_refs[i] = static_cast<int>(i);
  for (Eigen::Index i = 0; i < m; ++i)
    if (alpha(i) > 1e-12) model.support_indices.push_back(static_cast<int>(i));
  return model;
}

Eigen::VectorXd svm_decision(const SVMModel &model,
                             const Eigen::MatrixXd &cross_kernel) {
  if (cross_kernel.cols() != model.dual_coefs.size())
    throw std::invalid_argument("svm_decision: kernel column mismatch");
  return (cross_kernel * model.dual_coefs).array() + model.bias;
}

Eigen::VectorXi svm_predict(const SVMModel &model,
                            const Eigen::MatrixXd &cross_kernel) {
  const Eigen::VectorXd f = svm_decision(model, cross_kernel);
  Eigen::VectorXi y(f.size());
  for (Eigen::Index i = 0; i < f.size(); ++i) y(i) = f(i) >= 0.0 ? 1 : -1;
  return y;
}

}  // namespace quernel
