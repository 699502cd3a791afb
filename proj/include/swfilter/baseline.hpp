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

// Reference unsupervised detectors: k-th nearest neighbour distance and
// Local Outlier Factor. Both return raw scores; turning scores into labels
// is left to the evaluation harness.

#ifndef SWFILTER_BASELINE_HPP_
#define SWFILTER_BASELINE_HPP_

#include <cstddef>
#include <vector>

#include "swfilter/dataset.hpp"
#include "swfilter/matrix.hpp"

namespace swfilter::baseline {

// k nearest neighbours of every sample under the Euclidean distance,
// excluding the sample itself. Ties at equal distance are broken by the
// smaller index and every list is truncated at exactly k.
struct NeighborGraph {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> indices;
  std::vector<std::vector<double>> distances;  // non-decreasing per sample
};

NeighborGraph BuildNeighborGraph(const Matrix& points, std::size_t k,
                                 std::size_t workers = 1);

// Distance to the k-th nearest neighbour. Requires 1 <= k <= N - 1.
std::vector<double> KnnScore(const Matrix& points, std::size_t k,
                             std::size_t workers = 1);

// Local reachability densities are computed from reachability distances
// floored at 1e-12, so duplicate clusters yield a finite density and a
// symmetric all-duplicate neighbourhood scores exactly 1.
std::vector<double> LofScore(const Matrix& points, std::size_t k,
                             std::size_t workers = 1);

inline std::vector<double> KnnScore(const Dataset& data, std::size_t k,
                                    std::size_t workers = 1) {
  data.Validate();
  return KnnScore(data.values, k, workers);
}
inline std::vector<double> LofScore(const Dataset& data, std::size_t k,
                                    std::size_t workers = 1) {
  data.Validate();
  return LofScore(data.values, k, workers);
}

}  // namespace swfilter::baseline

#endif  // SWFILTER_BASELINE_HPP_
