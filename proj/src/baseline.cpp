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

#include "swfilter/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "swfilter/error.hpp"

namespace swfilter::baseline {

namespace {

constexpr double kMinReachDistance = 1e-12;

void CheckK(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k = " + std::to_string(k) + " must lie in [1, N - 1] for N = " +
                    std::to_string(n));
  }
}

}  // namespace

NeighborGraph BuildNeighborGraph(const Matrix& points, std::size_t k,
                                 std::size_t workers) {
  const std::size_t n = points.rows();
  CheckK(n, k);
  NeighborGraph g;
  g.k = k;
  g.indices.resize(n);
  g.distances.resize(n);
  internal::ParallelFor(n, workers, [&](std::size_t q) {
    std::vector<std::pair<double, std::size_t>> cand;
    cand.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != q) cand.emplace_back(EuclideanDistance(points.row(q), points.row(j)), j);
    }
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k),
                      cand.end());
    auto& idx = g.indices[q];
    auto& dst = g.distances[q];
    for (std::size_t r = 0; r < k; ++r) {
      dst.push_back(cand[r].first);
      idx.push_back(cand[r].second);
    }
  });
  return g;
}

std::vector<double> KnnScore(const Matrix& points, std::size_t k,
                             std::size_t workers) {
  const NeighborGraph g = BuildNeighborGraph(points, k, workers);
  std::vector<double> score(points.rows());
  for (std::size_t i = 0; i < score.size(); ++i) score[i] = g.distances[i].back();
  return score;
}

std::vector<double> LofScore(const Matrix& points, std::size_t k,
                             std::size_t workers) {
  const NeighborGraph g = BuildNeighborGraph(points, k, workers);
  const std::size_t n = points.rows();
  std::vector<double> kdist(n);
  for (std::size_t i = 0; i < n; ++i) kdist[i] = g.distances[i].back();

  std::vector<double> lrd(n);
  for (std::size_t i = 0; i < n; ++i) {
    double reach = 0.0;
    for (std::size_t r = 0; r < k; ++r) {
      reach += std::max({kdist[g.indices[i][r]], g.distances[i][r],
                         kMinReachDistance});
    }
    lrd[i] = static_cast<double>(k) / reach;
  }

  std::vector<double> lof(n);
  for (std::size_t i = 0; i < n; ++i) {
    double ratio = 0.0;
    for (std::size_t o : g.indices[i]) ratio += lrd[o] / lrd[i];
    lof[i] = ratio / static_cast<double>(k);
  }
  return lof;
}

}  // namespace swfilter::baseline
