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

#include "quernel/preprocess.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quernel {

Standardizer Standardizer::fit(const Eigen::MatrixXd &x) {
  if (x.rows() < 2 || x.cols() < 1)
    throw std::invalid_argument("standardize: need at least 2 rows");
  Standardizer s;
  s.means = x.colwise().mean();
  s.stds.resize(x.cols());
  s.constant.assign(x.cols(), false);
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double var =
        (x.col(j).array() - s.means(j)).square().sum() / x.rows();
    if (var <= 0.0) {
      s.constant[j] = true;
      s.stds(j) = 1.0;
    } else {
      s.stds(j) = std::sqrt(var);
    }
  }
  return s;
}

Eigen::MatrixXd Standardizer::transform(const Eigen::MatrixXd &x) const {
  if (x.cols() != means.size())
    throw std::invalid_argument("standardize: column count mismatch");
  Eigen::MatrixXd out(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    if (constant[j])
      out.col(j).setZero();
    else
      out.col(j) = (x.col(j).array() - means(j)) / stds(j);
  }
  return out;
}

Eigen::MatrixXd standardize_fit_transform(const Eigen::MatrixXd &x,
                                          Standardizer *out) {
  const Standardizer s = Standardizer::fit(x);
  if (out) *out = s;
  return s.transform(x);
}

PCAModel pca_fit(const Eigen::MatrixXd &x, int k) {
  if (x.rows() < 2) throw std::invalid_argument("pca_fit: need >= 2 rows");
  if (k < 1 || k > x.cols())
    throw std::invalid_argument("pca_fit: k out of range");
  PCAModel model;
  model.means = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - model.means.transpose();
  const Eigen::MatrixXd cov =
      centered.transpose() * centered / double(x.rows() - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("pca_fit: eigendecomposition failed");
  // eigenvalues come back ascending; take the top k in descending order
  model.components.resize(k, x.cols());
  model.explained_variance.resize(k);
  for (int c = 0; c < k; ++c) {
    const Eigen::Index src = x.cols() - 1 - c;
    Eigen::VectorXd v = es.eigenvectors().col(src);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    if (v(arg) < 0) v = -v;
    model.components.row(c) = v.transpose();
    model.explained_variance(c) = es.eigenvalues()(src);
  }
  return model;
}

Eigen::MatrixXd pca_transform(const PCAModel &model,
                              const Eigen::MatrixXd &x) {
  if (x.cols() != model.means.size())
    throw std::invalid_argument("pca_transform: column count mismatch");
  return (x.rowwise() - model.means.transpose()) *
         model.components.transpose();
}

AngleScaler AngleScaler::fit(const Eigen::MatrixXd &x) {
  if (x.rows() < 1) throw std::invalid_argument("angle scaler: empty input");
  AngleScaler s;
  s.mins = x.colwise().minCoeff();
  s.maxs = x.colwise().maxCoeff();
  return s;
}

Eigen::MatrixXd AngleScaler::transform(const Eigen::MatrixXd &x) const {
  if (x.cols() != mins.size())
    throw std::invalid_argument("angle scaler: column count mismatch");
  constexpr double pi = std::numbers::pi;
  Eigen::MatrixXd out(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    const double span = maxs(j) - mins(j);
    if (span <= 0.0) {
      out.col(j).setConstant(pi / 2);
    } else {
      out.col(j) = ((x.col(j).array() - mins(j)) / span * pi)
                       .cwiseMax(0.0)
                       .cwiseMin(pi);
    }
  }
  return out;
}

}  // namespace quernel
