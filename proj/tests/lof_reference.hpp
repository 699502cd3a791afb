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

#ifndef SWFILTER_TESTS_LOF_REFERENCE_HPP_
#define SWFILTER_TESTS_LOF_REFERENCE_HPP_

#include <algorithm>
#include <cmath>
#include <vector>

#include "swfilter/matrix.hpp"

namespace swfilter::testing {

// Textbook O(N^2) LOF from a full distance matrix: k-distance, reachability
// distance reach(p, o) = max(k-dist(o), d(p, o)) floored at 1e-12,
// lrd(p) = 1 / mean reach, LOF(p) = mean lrd(o) / lrd(p). Neighbours are the
// first k others by (distance, index).
inline std::vector<double> NaiveLof(const Matrix& x, std::size_t k) {
  const std::size_t n = x.rows();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0;
      for (std::size_t c = 0; c < x.cols(); ++c) {
        s += (x(i, c) - x(j, c)) * (x(i, c) - x(j, c));
      }
      dist[i][j] = std::sqrt(s);
    }
  }
  std::vector<std::vector<std::size_t>> nbrs(n);
  std::vector<double> kdist(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(j);
    }
    std::sort(others.begin(), others.end(), [&](std::size_t a, std::size_t b) {
      return dist[i][a] != dist[i][b] ? dist[i][a] < dist[i][b] : a < b;
    });
    nbrs[i].assign(others.begin(), others.begin() + k);
    kdist[i] = dist[i][nbrs[i].back()];
  }
  std::vector<double> lrd(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0;
    for (std::size_t o : nbrs[i]) {
      sum += std::max(std::max(kdist[o], dist[i][o]), 1e-12);
    }
    lrd[i] = 1.0 / (sum / k);
  }
  std::vector<double> lof(n);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0;
    for (std::size_t o : nbrs[i]) sum += lrd[o];
    lof[i] = sum / k / lrd[i];
  }
  return lof;
}

}  // namespace swfilter::testing

#endif  // SWFILTER_TESTS_LOF_REFERENCE_HPP_
