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

#include "quernel/classical_kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace quernel {

ClassicalKernelKind classical_kernel_from_string(const std::string &name) {
  if (name == "linear") return ClassicalKernelKind::kLinear;
  if (name == "poly") return ClassicalKernelKind::kPoly;
  if (name == "rbf") return ClassicalKernelKind::kRbf;
  if (name == "sigmoid") return ClassicalKernelKind::kSigmoid;
  throw std::invalid_argument("unknown classical kernel: " + name);
}

std::string to_string(ClassicalKernelKind kind) {
  switch (kind) {
    case ClassicalKernelKind::kLinear:
      return "linear";
    case ClassicalKernelKind::kPoly:
      return "poly";
    case ClassicalKernelKind::kRbf:
      return "rbf";
    case ClassicalKernelKind::kSigmoid:
      return "sigmoid";
  }
  return "?";
}

namespace {

double effective_gamma(const ClassicalKernelParams &p, Eigen::Index d) {
  const double g = p.gamma > 0 ? p.gamma : 1.0 / static_cast<double>(d);
  if (!std::isfinite(g) || g <= 0)
    throw std::invalid_argument("classical kernel: invalid gamma");
  return g;
}

}  // namespace

double classical_kernel(Eigen::Ref<const Eigen::VectorXd> x,
                        Eigen::Ref<const Eigen::VectorXd> y,
                        ClassicalKernelKind kind,
                        const ClassicalKernelParams &params) {
  if (x.size() != y.size())
    throw std::invalid_argument("classical kernel: length mismatch");
  if (x.size() == 0)
    throw std::invalid_argument("classical kernel: empty vectors");
  switch (kind) {
    case ClassicalKernelKind::kLinear:
      return x.dot(y);
    case ClassicalKernelKind::kPoly: {
      if (params.degree < 1)
        throw std::invalid_argument("poly kernel: degree must be >= 1");
      const double g = effective_gamma(params, x.size());
      return std::pow(g * x.dot(y) + params.coef0, params.degree);
    }
    case ClassicalKernelKind::kRbf: {
      const double g = effective_gamma(params, x.size());
      return std::exp(-g * (x - y).squaredNorm());
    }
    case ClassicalKernelKind::kSigmoid: {
      const double g = effective_gamma(params, x.size());
      return std::tanh(g * x.dot(y) + params.coef0);
    }
  }
  throw std::logic_error("classical_kernel: unreachable");
}

Eigen::MatrixXd classical_gram(const Eigen::MatrixXd &x_rows,
                               ClassicalKernelKind kind,
                               const ClassicalKernelParams &params) {
  const Eigen::Index m = x_rows.rows();
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i; j < m; ++j) {
      g(i, j) = classical_kernel(x_rows.row(i), x_rows.row(j), kind, params);
      g(j, i) = g(i, j);
    }
  return g;
}

Eigen::MatrixXd classical_cross(const Eigen::MatrixXd &x_train,
                                const Eigen::MatrixXd &x_test,
                                ClassicalKernelKind kind,
                                const ClassicalKernelParams &params) {
  Eigen::MatrixXd k(x_test.rows(), x_train.rows());
  for (Eigen::Index i = 0; i < x_test.rows(); ++i)
    for (Eigen::Index j = 0; j < x_train.rows(); ++j)
      k(i, j) = classical_kernel(x_test.row(i), x_train.row(j), kind, params);
  return k;
}

}  // namespace quernel
