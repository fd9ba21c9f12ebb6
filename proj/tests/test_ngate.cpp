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
#include "quernel/n_gate.hpp"

using namespace quernel;

TEST_CASE("n_matrix at zero angles is the identity") {
  const Eigen::Matrix4cd u = n_matrix(0, 0, 0);
  CHECK((u - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("n_matrix with only the ZZ angle is diagonal") {
  const double g = 0.37;
  const Eigen::Matrix4cd u = n_matrix(0, 0, g);
  Eigen::Vector4cd d;
  d << std::exp(std::complex<double>(0, g)),
      std::exp(std::complex<double>(0, -g)),
      std::exp(std::complex<double>(0, -g)),
      std::exp(std::complex<double>(0, g));
  CHECK((u - Eigen::Matrix4cd(d.asDiagonal())).cwiseAbs().maxCoeff() < 1e-14);
  // and the eigendecomposition-based exponential agrees
  const Eigen::MatrixXcd ref =
      oracles::expi_hermitian(oracles::n_generator(0, 0, g));
  CHECK((u - ref).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("n_matrix is unitary and matches the exponential oracle") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double a = 4 * M_PI * (rng.next_double() - 0.5);
    const double b = 4 * M_PI * (rng.next_double() - 0.5);
    const double c = 4 * M_PI * (rng.next_double() - 0.5);
    const Eigen::Matrix4cd u = n_matrix(a, b, c);
    const Eigen::Matrix4cd gram = u.adjoint() * u;
    CHECK((gram - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <=
          1e-10);
    const Eigen::MatrixXcd ref =
        oracles::expi_hermitian(oracles::n_generator(a, b, c));
    CHECK((u - ref).cwiseAbs().maxCoeff() <= 1e-10);
  }
  CHECK_THROWS_AS((void)n_matrix(std::nan(""), 0, 0), std::invalid_argument);
}

TEST_CASE("n_decomposition equals n_matrix up to a global phase") {
  const auto check = [](double a, double b, double c) {
    const Circuit dec = n_decomposition(a, b, c);
    long cnots = 0;
    for (const auto &g : dec.ops)
      if (g.kind == GateKind::kCnot) ++cnots;
    CHECK(cnots == 3);
    for (const auto &g : dec.ops)
      CHECK((g.kind == GateKind::kCnot || g.kind == GateKind::kRotY ||
             g.kind == GateKind::kRotZ));
    const Eigen::MatrixXcd u = oracles::circuit_unitary(dec);
    CHECK(oracles::phase_distance(u, n_matrix(a, b, c)) <= 1e-10);
  };
  check(0, 0, 0);
  Rng rng(23);
  for (int i = 0; i < 100; ++i)
    check(4 * M_PI * (rng.next_double() - 0.5),
          4 * M_PI * (rng.next_double() - 0.5),
          4 * M_PI * (rng.next_double() - 0.5));
}

TEST_CASE("expand_two_qubit_n preserves the circuit unitary") {
  Circuit c(3);
  c.add(GateOp::hadamard(1));
  c.add(GateOp::two_qubit_n(2, 0, 0.3, -0.8, 1.1));
  c.add(GateOp::rot_y(2, 0.4));
  c.add(GateOp::two_qubit_n(1, 2, -0.2, 0.55, 0.0));
  const Circuit e = expand_two_qubit_n(c);
  for (const auto &g : e.ops) CHECK(g.kind != GateKind::kTwoQubitN);
  CHECK(oracles::phase_distance(oracles::circuit_unitary(c),
                                oracles::circuit_unitary(e)) <= 1e-10);
}
