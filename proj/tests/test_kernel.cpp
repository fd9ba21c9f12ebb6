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
#include <cstdio>
#include <filesystem>

#include "quernel/feature_maps.hpp"
#include "quernel/kernel.hpp"
#include "quernel/rng.hpp"

using namespace quernel;

namespace {

MapBuilder cp_builder(int reps = 1) {
  return [reps](Eigen::Ref<const Eigen::VectorXd> x) {
    return build_cp_map(x, {.reps = reps});
  };
}

MapBuilder zz_builder(int reps = 1) {
  return [reps](Eigen::Ref<const Eigen::VectorXd> x) {
    return build_zz_map(x, {.reps = reps});
  };
}

Eigen::MatrixXd random_angle_rows(int m, int d, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd x(m, d);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < d; ++j) x(i, j) = M_PI * rng.next_double();
  return x;
}

}  // namespace

TEST_CASE("exact entries: self-fidelity and symmetry") {
  const Eigen::MatrixXd x = random_angle_rows(6, 7, 1);
  const KernelConfig exact;
  for (int i = 0; i < 3; ++i)
    CHECK(kernel_entry(x.row(i), x.row(i), cp_builder(), exact) ==
          doctest::Approx(1.0).epsilon(1e-12));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const double a = kernel_entry(x.row(i), x.row(j), cp_builder(), exact);
      const double b = kernel_entry(x.row(j), x.row(i), cp_builder(), exact);
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
      CHECK(a >= 0.0);
      CHECK(a <= 1.0);
    }
  Eigen::VectorXd short_vec = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(
      (void)kernel_entry(x.row(0), short_vec, cp_builder(), exact),
      std::invalid_argument);
}

TEST_CASE("shot estimates converge to the exact value") {
  const Eigen::MatrixXd x = random_angle_rows(20, 7, 2);  // 4-qubit cp map
  const KernelConfig exact;
  KernelConfig shots{.mode = KernelMode::kShots, .shots = 100000, .seed = 5};
  for (int p = 0; p < 10; ++p) {
    const auto a = x.row(2 * p), b = x.row(2 * p + 1);
    const double e = kernel_entry(a, b, cp_builder(), exact);
    const double s = kernel_entry(a, b, cp_builder(), shots);
    CHECK(std::abs(e - s) <= 0.01);
  }
  KernelConfig bad{.mode = KernelMode::kShots, .shots = 0};
  CHECK_THROWS_AS((void)kernel_entry(x.row(0), x.row(1), cp_builder(), bad),
                  std::invalid_argument);
}

TEST_CASE("gram matrix basics") {
  const KernelConfig exact;
  const Eigen::MatrixXd one = random_angle_rows(1, 3, 3);
  const Eigen::MatrixXd g1 = kernel_matrix(one, cp_builder(), exact);
  REQUIRE(g1.rows() == 1);
  CHECK(g1(0, 0) == 1.0);

  // duplicated row: identical rows/columns and unit entry at the crossing
  Eigen::MatrixXd x = random_angle_rows(5, 5, 4);
  x.row(3) = x.row(1);
  const Eigen::MatrixXd g = kernel_matrix(x, cp_builder(), exact);
  CHECK(g(1, 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((g.row(1) - g.row(3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((g.diagonal().array() - 1.0).abs().maxCoeff() < 1e-12);
}

TEST_CASE("exact gram matrices are PSD for all maps") {
  const Eigen::MatrixXd x = random_angle_rows(12, 5, 6);
  const KernelConfig exact;
  for (const auto &builder :
       {cp_builder(), zz_builder(),
        MapBuilder([](Eigen::Ref<const Eigen::VectorXd> v) {
          return build_z_map(v, 1);
        })}) {
    const Eigen::MatrixXd g = kernel_matrix(x, builder, exact);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    CHECK(es.eigenvalues().minCoeff() >= -1e-8);
  }
}

TEST_CASE("cross kernel agrees with entrywise evaluation") {
  const Eigen::MatrixXd train = random_angle_rows(3, 4, 7);
  const Eigen::MatrixXd test = random_angle_rows(5, 4, 8);
  const KernelConfig exact;
  const Eigen::MatrixXd k = cross_kernel(train, test, cp_builder(), exact);
  REQUIRE(k.rows() == 5);
  REQUIRE(k.cols() == 3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(k(i, j) == doctest::Approx(kernel_entry(test.row(i), train.row(j),
                                                    cp_builder(), exact))
                           .epsilon(1e-12));

  // a test row equal to a train row gives a unit entry
  Eigen::MatrixXd test2 = test;
  test2.row(0) = train.row(2);
  const Eigen::MatrixXd k2 = cross_kernel(train, test2, cp_builder(), exact);
  CHECK(k2(0, 2) == doctest::Approx(1.0).epsilon(1e-12));

  // X_test = X_train reproduces the Gram matrix
  const Eigen::MatrixXd k3 = cross_kernel(train, train, cp_builder(), exact);
  const Eigen::MatrixXd g = kernel_matrix(train, cp_builder(), exact);
  CHECK((k3 - g).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("parallel evaluation is bit-identical to sequential") {
  const Eigen::MatrixXd x = random_angle_rows(8, 5, 9);
  for (KernelMode mode : {KernelMode::kExact, KernelMode::kShots}) {
    KernelConfig seq{.mode = mode, .shots = 2048, .seed = 11, .jobs = 1};
    KernelConfig par{.mode = mode, .shots = 2048, .seed = 11, .jobs = 4};
    const Eigen::MatrixXd a = kernel_matrix(x, cp_builder(), seq);
    const Eigen::MatrixXd b = kernel_matrix(x, cp_builder(), par);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("zero-noise noisy mode tracks shot mode statistically") {
  const Eigen::MatrixXd x = random_angle_rows(6, 5, 10);
  const KernelConfig exact;
  KernelConfig noisy{.mode = KernelMode::kNoisy, .shots = 20000, .seed = 13};
  const Eigen::MatrixXd ge = kernel_matrix(x, cp_builder(), exact);
  const Eigen::MatrixXd gn = kernel_matrix(x, cp_builder(), noisy);
  // sampling error at 2e4 shots stays well under 0.02 per entry
  CHECK((ge - gn).cwiseAbs().maxCoeff() <= 0.02);
}

TEST_CASE("deviation from exact shrinks as depolarizing noise drops") {
  const Eigen::MatrixXd x = random_angle_rows(6, 3, 14);
  const KernelConfig exact;
  const Eigen::MatrixXd ge = kernel_matrix(x, zz_builder(), exact);
  double prev = std::numeric_limits<double>::infinity();
  for (double p2 : {0.05, 0.01, 0.0}) {
    KernelConfig noisy{.mode = KernelMode::kNoisy,
                       .shots = 8192,
                       .noise = {.p1 = 0, .p2 = p2, .readout_flip = 0},
                       .seed = 15};
    const Eigen::MatrixXd g = kernel_matrix(x, zz_builder(), noisy);
    double mean_abs = 0.0;
    int count = 0;
    for (int i = 0; i < g.rows(); ++i)
      for (int j = i + 1; j < g.cols(); ++j) {
        mean_abs += std::abs(g(i, j) - ge(i, j));
        ++count;
      }
    mean_abs /= count;
    CHECK(mean_abs < prev);
    prev = mean_abs;
  }
}

TEST_CASE("kernel csv round trip is exact") {
  const Eigen::MatrixXd x = random_angle_rows(5, 4, 16);
  const Eigen::MatrixXd g = kernel_matrix(x, cp_builder(), {});
  const std::string path =
      (std::filesystem::temp_directory_path() / "quernel_kernel_test.csv")
          .string();
  std::vector<int> ids{10, 11, 12, 13, 14};
  write_kernel_csv(path, g, ids, ids);
  const Eigen::MatrixXd back = read_kernel_csv(path);
  CHECK((g - back).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}
