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

#include "swfilter/dataset.hpp"

#include <cmath>

#include "swfilter/error.hpp"

namespace swfilter {

void Dataset::Validate() const {
  if (values.rows() == 0 || values.cols() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "dataset is empty");
  }
  if (!feature_names.empty() && feature_names.size() != values.cols()) {
    throw Error(ErrorCode::kSizeMismatch,
                "feature name count does not match dimension");
  }
  if (truth_labels && truth_labels->size() != values.rows()) {
    throw Error(ErrorCode::kSizeMismatch,
                "truth label count does not match sample count");
  }
  for (std::size_t i = 0; i < values.rows(); ++i) {
    for (double v : values.row(i)) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFiniteValue,
                    "non-finite value in row " + std::to_string(i));
      }
    }
  }
}

Dataset Dataset::FromMatrix(Matrix values, std::string provenance) {
  Dataset d;
  d.feature_names = DefaultFeatureNames(values.cols());
  d.values = std::move(values);
  d.provenance = std::move(provenance);
  return d;
}

std::vector<std::string> DefaultFeatureNames(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) names.push_back("x" + std::to_string(c));
  return names;
}

StandardizeResult Standardize(const Dataset& data) {
  const std::size_t n = data.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "standardization needs at least 2 samples");
  }
  StandardizeResult out{data, {}, {}};
  out.stats.resize(data.dim());
  for (std::size_t c = 0; c < data.dim(); ++c) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += data.values(i, c);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dv = data.values(i, c) - mean;
      var += dv * dv;
    }
    var /= static_cast<double>(n);
    double sd = std::sqrt(var);
    // Relative test so that rounding noise on a constant column is not
    // mistaken for spread.
    if (sd <= 1e-12 * std::max(1.0, std::fabs(mean))) {
      sd = 0.0;
      const std::string name = c < data.feature_names.size()
                                   ? data.feature_names[c]
                                   : std::to_string(c);
      out.warnings.push_back("column '" + name +
                             "' is constant; standardized to 0");
    }
    out.stats[c] = {mean, sd};
    for (std::size_t i = 0; i < n; ++i) {
      out.data.values(i, c) =
          sd == 0.0 ? 0.0 : (data.values(i, c) - mean) / sd;
    }
  }
  return out;
}

}  // namespace swfilter
