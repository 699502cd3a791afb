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

#ifndef SWFILTER_TESTS_TEST_UTIL_HPP_
#define SWFILTER_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "swfilter/matrix.hpp"

namespace swfilter::testing {

inline Matrix RandomMatrix(std::size_t rows, std::size_t cols,
                           std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (double& v : m.row(r)) v = normal(rng);
  }
  return m;
}

// Minimum over all m! bijections of (1/m) sum |x_i - y_sigma(i)|^t, then the
// t-th root. Independent of any sorting argument.
inline double BruteForceWasserstein(std::vector<double> xs,
                                    const std::vector<double>& ys, double t) {
  std::vector<std::size_t> perm(ys.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      cost += std::pow(std::fabs(xs[i] - ys[perm[i]]), t);
    }
    best = std::min(best, cost / static_cast<double>(xs.size()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::pow(best, 1.0 / t);
}

// Copy of `points` without row `skip`.
inline Matrix WithoutRow(const Matrix& points, std::size_t skip) {
  Matrix out(0, points.cols());
  for (std::size_t r = 0; r < points.rows(); ++r) {
    if (r != skip) out.AppendRow(points.row(r));
  }
  return out;
}

}  // namespace swfilter::testing

#endif  // SWFILTER_TESTS_TEST_UTIL_HPP_
