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

#include "quernel/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "quernel/errors.hpp"
#include "quernel/rng.hpp"

namespace quernel {

namespace {

std::string trim(const std::string &s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool is_missing(const std::string &cell) {
  if (cell.empty()) return true;
  std::string low;
  for (char c : cell) low.push_back(static_cast<char>(std::tolower(c)));
  return low == "na" || low == "nan" || low == "null";
}

std::vector<std::string> split_line(const std::string &line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

}  // namespace

Dataset Dataset::subset(const std::vector<int> &row_indices) const {
  Dataset out;
  out.feature_names = feature_names;
  out.label_names = label_names;
  out.features.resize(row_indices.size(), features.cols());
  out.labels.resize(row_indices.size());
  out.row_ids.reserve(row_indices.size());
  for (std::size_t k = 0; k < row_indices.size(); ++k) {
    const int i = row_indices[k];
    if (i < 0 || i >= features.rows())
      throw std::out_of_range("dataset subset: row index out of range");
    out.features.row(k) = features.row(i);
    out.labels(k) = labels(i);
    out.row_ids.push_back(row_ids[i]);
  }
  return out;
}

Dataset load_csv(const std::string &path, const std::string &label_column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset: " + path);
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty dataset file: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_line(line);
  int label_idx = -1;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == label_column) label_idx = static_cast<int>(j);
  if (label_idx < 0)
    throw DataError("label column '" + label_column + "' not found in " + path);

  std::vector<std::vector<double>> rows;
  std::vector<std::string> raw_labels;
  std::vector<int> ids;
  int dropped = 0;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size())
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": wrong column count");
    bool missing = false;
    for (const auto &c : cells)
      if (is_missing(c)) missing = true;
    if (missing) {
      ++dropped;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size() - 1);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (static_cast<int>(j) == label_idx) continue;
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(cells[j], &used);
      } catch (const std::exception &) {
        throw DataError(path + ":" + std::to_string(line_no) +
                        ": non-numeric feature value '" + cells[j] + "'");
      }
      if (used != cells[j].size())
        throw DataError(path + ":" + std::to_string(line_no) +
                        ": non-numeric feature value '" + cells[j] + "'");
      if (!std::isfinite(v))
        throw DataError(path + ":" + std::to_string(line_no) +
                        ": non-finite feature value");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
    raw_labels.push_back(cells[label_idx]);
    ids.push_back(line_no - 2);  // 0-based data row
  }
  if (rows.empty()) throw DataError("no usable rows in " + path);

  std::vector<std::string> distinct = raw_labels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.size() != 2)
    throw DataError("dataset must be binary: found " +
                    std::to_string(distinct.size()) + " label values in " +
                    path);

  Dataset d;
  d.dropped_rows = dropped;
  d.label_names = {distinct[0], distinct[1]};
  for (std::size_t j = 0; j < header.size(); ++j)
    if (static_cast<int>(j) != label_idx) d.feature_names.push_back(header[j]);
  d.features.resize(rows.size(), rows[0].size());
  d.labels.resize(rows.size());
  d.row_ids = std::move(ids);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      d.features(i, j) = rows[i][j];
    d.labels(i) = raw_labels[i] == distinct[0] ? -1 : 1;
  }
  return d;
}

namespace {

std::vector<int> shuffled_indices(const std::vector<int> &src, Rng &rng) {
  std::vector<int> idx = src;
  for (std::size_t i = idx.size(); i > 1; --i)
    std::swap(idx[i - 1], idx[rng.uniform_int(i)]);
  return idx;
}

void check_fraction(double f) {
  if (!(f > 0.0 && f < 1.0))
    throw std::invalid_argument("train fraction must be in (0, 1)");
}

}  // namespace

std::pair<Dataset, Dataset> stratified_split(const Dataset &dataset,
                                             double train_fraction,
                                             std::uint64_t seed) {
  check_fraction(train_fraction);
  std::vector<int> neg, pos;
  for (Eigen::Index i = 0; i < dataset.size(); ++i)
    (dataset.labels(i) == 1 ? pos : neg).push_back(static_cast<int>(i));
  if (neg.size() < 2 || pos.size() < 2)
    throw DataError("stratified split needs >= 2 samples per class");

  Rng rng(seed);
  std::vector<int> train_idx, test_idx;
  for (const auto *cls : {&neg, &pos}) {
    const auto shuffled = shuffled_indices(*cls, rng);
    const long want = std::lround(train_fraction * shuffled.size());
    const long n_train = std::clamp<long>(
        want, 1, static_cast<long>(shuffled.size()) - 1);
    train_idx.insert(train_idx.end(), shuffled.begin(),
                     shuffled.begin() + n_train);
    test_idx.insert(test_idx.end(), shuffled.begin() + n_train,
                    shuffled.end());
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());
  return {dataset.subset(train_idx), dataset.subset(test_idx)};
}

std::pair<Dataset, Dataset> shuffled_split(const Dataset &dataset,
                                           double train_fraction,
                                           std::uint64_t seed) {
  check_fraction(train_fraction);
  if (dataset.size() < 2) throw DataError("split needs >= 2 samples");
  std::vector<int> all(dataset.size());
  for (Eigen::Index i = 0; i < dataset.size(); ++i)
    all[i] = static_cast<int>(i);
  Rng rng(seed);
  const auto shuffled = shuffled_indices(all, rng);
  const long want = std::lround(train_fraction * shuffled.size());
  const long n_train =
      std::clamp<long>(want, 1, static_cast<long>(shuffled.size()) - 1);
  std::vector<int> train_idx(shuffled.begin(), shuffled.begin() + n_train);
  std::vector<int> test_idx(shuffled.begin() + n_train, shuffled.end());
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());
  return {dataset.subset(train_idx), dataset.subset(test_idx)};
}

Dataset synthesize_gaussian(const SyntheticSpec &spec) {
  if (spec.num_samples < 2 || spec.num_features < 1)
    throw std::invalid_argument("synthetic spec: need >= 2 samples, >= 1 feature");
  if (spec.separation < 0)
    throw std::invalid_argument("synthetic spec: separation must be >= 0");
  Rng rng(spec.seed);
  Eigen::VectorXd axis(spec.num_features);
  for (int j = 0; j < spec.num_features; ++j) axis(j) = rng.normal();
  axis.normalize();

  const int n_pos = (spec.num_samples + 1) / 2;
  const int n_neg = spec.num_samples - n_pos;
  Dataset d;
  d.features.resize(spec.num_samples, spec.num_features);
  d.labels.resize(spec.num_samples);
  d.label_names = {"-1", "+1"};
  for (int j = 0; j < spec.num_features; ++j)
    d.feature_names.push_back("f" + std::to_string(j));
  for (int i = 0; i < spec.num_samples; ++i) {
    const int label = i < n_neg ? -1 : 1;
    const Eigen::VectorXd mean = label * (spec.separation / 2.0) * axis;
    for (int j = 0; j < spec.num_features; ++j)
      d.features(i, j) = mean(j) + rng.normal();
    d.labels(i) = label;
    d.row_ids.push_back(i);
  }
  return d;
}

}  // namespace quernel
