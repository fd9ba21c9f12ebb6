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
#include <string>

namespace quernel {

enum class ClassicalKernelKind { kLinear, kPoly, kRbf, kSigmoid };

ClassicalKernelKind classical_kernel_from_string(const std::string &name);
std::string to_string(ClassicalKernelKind kind);

struct ClassicalKernelParams {
  double gamma = -1.0;  // <= 0 means 1/d
  double coef0 = 0.0;
  int degree = 3;
};

/// linear: x.y | poly: (g x.y + c)^deg | rbf: exp(-g |x-y|^2) |
/// sigmoid: tanh(g x.y + c)
double classical_kernel(Eigen::Ref<const Eigen::VectorXd> x,
                        Eigen::Ref<const Eigen::VectorXd> y,
                        ClassicalKernelKind kind,
                        const ClassicalKernelParams &params = {});

Eigen::MatrixXd classical_gram(const Eigen::MatrixXd &x_rows,
                               ClassicalKernelKind kind,
                               const ClassicalKernelParams &params = {});

/// k(test_i, train_j)
Eigen::MatrixXd classical_cross(const Eigen::MatrixXd &x_train,
                                const Eigen::MatrixXd &x_test,
                                ClassicalKernelKind kind,
                                const ClassicalKernelParams &params = {});

}  // namespace quernel
