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

#include "quernel/stats.hpp"

#include <cmath>
#include <stdexcept>

#include "quernel/errors.hpp"

namespace quernel {

namespace {

/// Continued fraction for the incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int max_iter = 300;
  constexpr double eps = 3e-16;
  constexpr double tiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < eps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (a <= 0 || b <= 0)
    throw std::invalid_argument("incomplete beta: a, b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) -
                          std::lgamma(b) + a * std::log(x) +
                          b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, int dof) {
  if (dof < 1) throw std::invalid_argument("student t: dof must be >= 1");
  const double x = dof / (dof + t * t);
  return regularized_incomplete_beta(dof / 2.0, 0.5, x);
}

TTestResult paired_t_test(const std::vector<double> &a,
                          const std::vector<double> &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("paired_t_test: length mismatch");
  const int n = static_cast<int>(a.size());
  if (n < 2) throw std::invalid_argument("paired_t_test: need n >= 2");
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= n;
  double ss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = a[i] - b[i] - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / (n - 1));
  if (sd == 0.0)
    throw NumericalError("paired_t_test: zero-variance differences");
  TTestResult r;
  r.dof = n - 1;
  r.mean_diff = mean;
  r.std_diff = sd;
  r.t_statistic = mean / (sd / std::sqrt(double(n)));
  r.p_value = student_t_two_sided_p(r.t_statistic, r.dof);
  return r;
}

MeanStd mean_std(const std::vector<double> &values) {
  if (values.size() < 2)
    throw std::invalid_argument("mean_std: need >= 2 values");
  MeanStd ms;
  for (double v : values) ms.mean += v;
  ms.mean /= values.size();
  double ss = 0.0;
  for (double v : values) ss += (v - ms.mean) * (v - ms.mean);
  ms.std = std::sqrt(ss / (values.size() - 1));
  return ms;
}

std::map<std::string, MeanStd> summarize_runs(
    const std::map<std::string, std::vector<double>> &metric_by_kernel) {
  if (metric_by_kernel.empty())
    throw std::invalid_argument("summarize_runs: empty input");
  std::map<std::string, MeanStd> out;
  for (const auto &[kernel, values] : metric_by_kernel)
    out[kernel] = mean_std(values);
  return out;
}

}  // namespace quernel
