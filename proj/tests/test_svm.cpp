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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "quernel/rng.hpp"
#include "quernel/svm.hpp"

using namespace quernel;

namespace {

/// Random PSD kernel via a random Gram construction.
Eigen::MatrixXd random_psd_kernel(int m, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd a(m, m + 2);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m + 2; ++j) a(i, j) = 2.0 * (rng.next_double() - 0.5);
  Eigen::MatrixXd k = a * a.transpose();
  k += 1e-9 * Eigen::MatrixXd::Identity(m, m);
  return k;
}

void check_feasible(const SVMModel &model, const Eigen::VectorXi &y) {
  double eq = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double alpha = model.dual_coefs(i) * y(i);
    CHECK(alpha >= -1e-12);
    CHECK(alpha <= model.c_box + 1e-12);
    eq += alpha * y(i);
  }
  CHECK(std::abs(eq) <= 1e-8);
}

}  // namespace

TEST_CASE("two-point problem on the identity kernel") {
  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(2, 2);
  Eigen::VectorXi y(2);
  y << 1, -1;
  const SVMModel m = svm_train(k, y, {.c_box = 1.0, .tol = 1e-6});
  CHECK(m.support_indices.size() == 2);
  check_feasible(m, y);
  const Eigen::VectorXi pred = svm_predict(m, k);
  CHECK(pred(0) == 1);
  CHECK(pred(1) == -1);
}

TEST_CASE("smo reaches the exhaustive QP optimum on small problems") {
  for (int trial = 0; trial < 12; ++trial) {
    const int m = 3 + trial % 2;
    const Eigen::MatrixXd k = random_psd_kernel(m, 100 + trial);
    Eigen::VectorXi y(m);
    Rng rng(200 + trial);
    bool pos = false, neg = false;
    for (int i = 0; i < m; ++i) {
      y(i) = rng.bernoulli(0.5) ? 1 : -1;
      (y(i) == 1 ? pos : neg) = true;
    }
    if (!pos) y(0) = 1;
    if (!neg) y(m - 1) = -1;
    const double c_box = trial % 3 == 0 ? 0.5 : 1.0;

    const auto [best, best_alpha] = oracles::exhaustive_svm_dual(k, y, c_box);
    const SVMModel model = svm_train(
        k, y,
        {.c_box = c_box, .tol = 1e-9, .max_passes = 40, .seed = 7});
    Eigen::VectorXd alpha(m);
    for (int i = 0; i < m; ++i) alpha(i) = model.dual_coefs(i) * y(i);
    const double obj = svm_dual_objective(k, y, alpha);
    CHECK(obj == doctest::Approx(best).epsilon(1e-6));
    CHECK(obj <= best + 1e-9);  // oracle is the true maximum
    check_feasible(model, y);

    // decision-value signs match the oracle solution on the training set
    Eigen::VectorXd oracle_coefs(m);
    for (int i = 0; i < m; ++i) oracle_coefs(i) = best_alpha(i) * y(i);
    const Eigen::VectorXd f_model = svm_decision(model, k);
    for (int i = 0; i < m; ++i) {
      if (std::abs(f_model(i)) > 1e-6 && best_alpha(i) > 1e-9 &&
          best_alpha(i) < c_box - 1e-9)
        CHECK((f_model(i) >= 0 ? 1 : -1) == y(i));
    }
  }
}

TEST_CASE("dual objective is nondecreasing across sweeps") {
  const Eigen::MatrixXd k = random_psd_kernel(12, 55);
  Eigen::VectorXi y(12);
  for (int i = 0; i < 12; ++i) y(i) = i % 2 == 0 ? 1 : -1;
  const SVMModel m = svm_train(
      k, y, {.tol = 1e-6, .max_passes = 20, .seed = 3, .record_objective = true});
  REQUIRE(m.objective_trace.size() >= 2);
  for (std::size_t i = 1; i < m.objective_trace.size(); ++i)
    CHECK(m.objective_trace[i] >= m.objective_trace[i - 1] - 1e-9);
}

TEST_CASE("label negation flips every prediction") {
  const Eigen::MatrixXd k = random_psd_kernel(8, 77);
  Eigen::VectorXi y(8);
  for (int i = 0; i < 8; ++i) y(i) = i < 4 ? 1 : -1;
  const SVMModel a = svm_train(k, y, {.tol = 1e-8, .seed = 5});
  const SVMModel b = svm_train(k, (-y.array()).matrix(), {.tol = 1e-8, .seed = 5});
  const Eigen::VectorXd fa = svm_decision(a, k);
  const Eigen::VectorXd fb = svm_decision(b, k);
  for (int i = 0; i < 8; ++i)
    CHECK(fa(i) == doctest::Approx(-fb(i)).epsilon(1e-6));
}

TEST_CASE("separable training set is classified perfectly") {
  // kernel from well-separated 1-d points: class by sign
  const int m = 10;
  Eigen::VectorXd pts(m);
  Eigen::VectorXi y(m);
  for (int i = 0; i < m; ++i) {
    pts(i) = (i < 5 ? -2.0 : 2.0) + 0.1 * i;
    y(i) = i < 5 ? -1 : 1;
  }
  Eigen::MatrixXd k(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      k(i, j) = std::exp(-0.5 * (pts(i) - pts(j)) * (pts(i) - pts(j)));
  const SVMModel model = svm_train(k, y, {.tol = 1e-6});
  const Eigen::VectorXi pred = svm_predict(model, k);
  for (int i = 0; i < m; ++i) CHECK(pred(i) == y(i));
  check_feasible(model, y);
}

TEST_CASE("input validation") {
  Eigen::MatrixXd k = Eigen::MatrixXd::Identity(3, 3);
  Eigen::VectorXi y(3);
  y << 1, 1, 1;
  CHECK_THROWS_AS((void)svm_train(k, y, {}), std::invalid_argument);
  y << 1, -1, 2;
  CHECK_THROWS_AS((void)svm_train(k, y, {}), std::invalid_argument);
  Eigen::MatrixXd rect(3, 2);
  rect.setZero();
  y << 1, -1, 1;
  CHECK_THROWS_AS((void)svm_train(rect, y, {}), std::invalid_argument);
  const SVMModel m = svm_train(k, y, {});
  Eigen::MatrixXd wrong(2, 2);
  wrong.setZero();
  CHECK_THROWS_AS((void)svm_predict(m, wrong), std::invalid_argument);
}

TEST_CASE("sweep cap reports non-convergence instead of throwing") {
  const Eigen::MatrixXd k = random_psd_kernel(10, 91);
  Eigen::VectorXi y(10);
  for (int i = 0; i < 10; ++i) y(i) = i % 2 ? 1 : -1;
  const SVMModel m =
      svm_train(k, y, {.tol = 1e-12, .max_passes = 1000000, .max_sweeps = 3});
  CHECK_FALSE(m.converged);
  CHECK(m.sweeps == 3);
}
