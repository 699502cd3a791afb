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

// Seeded synthetic datasets. Every generator is a pure function of its
// parameters and seed.

#ifndef SWFILTER_GENERATORS_HPP_
#define SWFILTER_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swfilter/dataset.hpp"
#include "swfilter/matrix.hpp"

namespace swfilter {

struct GaussianGroup {
  std::size_t count = 0;
  std::vector<double> mean;
  Matrix cov;  // symmetric positive semi-definite
};

// Majority / minority / outlier mixture. Rows are emitted group by group in
// that order; truth labels mark the outlier group only.
struct ThreeGaussianParams {
  GaussianGroup majority;
  GaussianGroup minority;
  GaussianGroup outliers;

  // Illustrative 2-D layout: a dense majority at the origin, a smaller
  // tight group off to one side and a sparse cloud of far outliers.
  static ThreeGaussianParams Default(std::size_t n_major = 300,
                                     std::size_t n_minor = 60,
                                     std::size_t n_outlier = 15);
};

Dataset GenerateThreeGaussians(const ThreeGaussianParams& params,
                               std::uint64_t seed);

// Lower-triangular L with L L^T = cov. Zero pivots are allowed (PSD input);
// throws kInvalidArgument when cov is asymmetric or not PSD.
Matrix PsdCholesky(const Matrix& cov);

enum class ToyKind { kBlobs, kMoons, kCircles, kAnisotropic, kUniformNoise };

ToyKind ParseToyKind(std::string_view name);  // throws on unknown names
std::string_view ToyKindName(ToyKind kind);

struct ToyOptions {
  std::size_t n = 300;   // inlier count
  double noise = 0.05;   // stddev of additive Gaussian noise
  std::uint64_t seed = 0;
  // Extra uniform points on [-6, 6]^2 labelled as outliers, as a fraction
  // of n (rounded down).
  double outlier_fraction = 0.0;
  std::size_t blob_centers = 3;  // blobs / anisotropic
  double circle_factor = 0.5;    // inner / outer radius, circles only
};

// 2-D shapes:
//   blobs        centers on a circle of radius 3 (the single center is the
//                origin), points split evenly
//   moons        upper arc (cos s, sin s), lower arc (1 - cos s, 0.5 - sin s),
//                s in [0, pi]
//   circles      outer radius 1, inner radius circle_factor
//   anisotropic  blobs sheared by [[0.6, -0.6], [-0.4, 0.8]]
//   uniform_noise  uniform on [-7, 7]^2
Dataset GenerateToy(ToyKind kind, const ToyOptions& options);

// `replicas` copies of: `inliers` points uniform on [0, 1]^2 followed by
// one planted outlier at (100, 100). Each replica draws fresh inliers.
Dataset GeneratePlantedOutliers(std::size_t inliers, std::size_t replicas,
                                std::uint64_t seed);

}  // namespace swfilter

#endif  // SWFILTER_GENERATORS_HPP_
