/*
 * Copyright 2026 The swfilter Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SWFILTER_DATASET_HPP_
#define SWFILTER_DATASET_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swfilter/matrix.hpp"

namespace swfilter {

// N x d sample matrix with optional ground truth (true = outlier).
struct Dataset {
  Matrix values;
  std::vector<std::string> feature_names;
  std::optional<std::vector<bool>> truth_labels;
  std::string provenance;

  std::size_t size() const noexcept { return values.rows(); }
  std::size_t dim() const noexcept { return values.cols(); }
  bool has_labels() const noexcept { return truth_labels.has_value(); }

  // Throws kNonFiniteValue naming the first offending row, or
  // kSizeMismatch / kInvalidArgument on inconsistent metadata.
  void Validate() const;

  static Dataset FromMatrix(Matrix values, std::string provenance = {});
};

// Feature names x0, x1, ... used when a file has no header.
std::vector<std::string> DefaultFeatureNames(std::size_t dim);

struct ColumnStats {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

struct StandardizeResult {
  Dataset data;
  std::vector<ColumnStats> stats;
  std::vector<std::string> warnings;
};

// Zero mean, unit population variance per column. Constant columns map to
// zero with stddev recorded as 0 and a warning.
StandardizeResult Standardize(const Dataset& data);

}  // namespace swfilter

#endif  // SWFILTER_DATASET_HPP_
