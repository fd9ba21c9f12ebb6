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

#include "quernel/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace quernel {

ConfusionCounts confusion(const Eigen::VectorXi &y_true,
                          const Eigen::VectorXi &y_pred) {
  if (y_true.size() != y_pred.size())
    throw std::invalid_argument("confusion: length mismatch");
  ConfusionCounts c;
  for (Eigen::Index i = 0; i < y_true.size(); ++i) {
    if (y_true(i) != 1 && y_true(i) != -1)
      throw std::invalid_argument("confusion: labels must be -1 or +1");
    if (y_pred(i) != 1 && y_pred(i) != -1)
      throw std::invalid_argument("confusion: labels must be -1 or +1");
    if (y_true(i) == 1)
      ++(y_pred(i) == 1 ? c.tp : c.fn);
    else
      ++(y_pred(i) == -1 ? c.tn : c.fp);
  }
  return c;
}

Metrics compute_metrics(const ConfusionCounts &c) {
  Metrics m;
  const double tp = static_cast<double>(c.tp), tn = static_cast<double>(c.tn);
  const double fp = static_cast<double>(c.fp), fn = static_cast<double>(c.fn);
  const double total = tp + tn + fp + fn;
  m.accuracy = total > 0 ? (tp + tn) / total : 0.0;
  m.precision = tp + fp > 0 ? tp / (tp + fp) : 0.0;
  m.recall = tp + fn > 0 ? tp / (tp + fn) : 0.0;
  m.f1 = m.precision + m.recall > 0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  const double d1 = tp + fp, d2 = tp + fn, d3 = tn + fp, d4 = tn + fn;
  if (d1 == 0 || d2 == 0 || d3 == 0 || d4 == 0)
    m.mcc = 0.0;
  else
    m.mcc = (tp * tn - fp * fn) / std::sqrt(d1 * d2 * d3 * d4);
  return m;
}

}  // namespace quernel
