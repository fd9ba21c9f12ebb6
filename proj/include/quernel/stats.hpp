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

#include <map>
#include <string>
#include <vector>

namespace quernel {

struct TTestResult {
  double t_statistic = 0.0;
  double p_value = 1.0;
  int dof = 0;
  double mean_diff = 0.0;
  double std_diff = 0.0;  // sample standard deviation (n - 1 divisor)
};

/// Two-sided paired t-test on equal-length series. Throws NumericalError
/// when the differences have zero variance, std::invalid_argument on
/// length problems.
TTestResult paired_t_test(const std::vector<double> &a,
                          const std::vector<double> &b);

/// Regularized incomplete beta I_x(a, b) by continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

/// Two-sided p-value of Student's t with `dof` degrees of freedom.
double student_t_two_sided_p(double t, int dof);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
};

MeanStd mean_std(const std::vector<double> &values);

/// Per-kernel mean/std over repeated runs; every series needs >= 2 values.
std::map<std::string, MeanStd> summarize_runs(
    const std::map<std::string, std::vector<double>> &metric_by_kernel);

}  // namespace quernel
