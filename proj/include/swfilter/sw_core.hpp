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

// One-dimensional optimal transport between uniform empirical measures of
// equal size, and its sliced extension to d dimensions through random
// linear projections.

#ifndef SWFILTER_SW_CORE_HPP_
#define SWFILTER_SW_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swfilter/matrix.hpp"

namespace swfilter::sw {

// Wasserstein order t; always >= 1. The ground norm is Euclidean.
class OTOrder {
 public:
  explicit OTOrder(double t = 1.0);
  double value() const noexcept { return t_; }

  // |x|^t with exact fast paths for t = 1 and t = 2.
  double Cost(double x) const noexcept;
  // m^(1/t).
  double Root(double m) const noexcept;

  friend bool operator==(const OTOrder&, const OTOrder&) = default;

 private:
  double t_;
};

// Sorted (non-decreasing) projected coordinates of a point cloud.
class Projection1D {
 public:
  explicit Projection1D(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::vector<double> values_;
};

// L unit vectors on the sphere S^{d-1}. Immutable once built.
class DirectionSet {
 public:
  // Normalized standard-normal draws; identical (d, L, seed) give
  // bit-identical directions.
  static DirectionSet Sample(std::size_t dim, std::size_t count,
                             std::uint64_t seed);

  // Explicit directions, each of which must have unit norm (1e-6).
  static DirectionSet FromVectors(const Matrix& directions);

  std::size_t dim() const noexcept { return dirs_.cols(); }
  std::size_t size() const noexcept { return dirs_.rows(); }
  std::uint64_t seed() const noexcept { return seed_; }
  std::span<const double> direction(std::size_t l) const {
    return dirs_.row(l);
  }
  const Matrix& matrix() const noexcept { return dirs_; }

 private:
  DirectionSet(Matrix dirs, std::uint64_t seed)
      : dirs_(std::move(dirs)), seed_(seed) {}

  Matrix dirs_;
  std::uint64_t seed_ = 0;
};

// Inner product of every row with `direction`, in row order.
std::vector<double> Project(const Matrix& points,
                            std::span<const double> direction);

// ((1/m) sum_i |x_(i) - y_(i)|^t)^(1/t) over the ascending-sorted inputs.
double Wasserstein1D(std::span<const double> xs, std::span<const double> ys,
                     OTOrder t);
double Wasserstein1D(const Projection1D& xs, const Projection1D& ys,
                     OTOrder t);

// W_t^t of every projection, in direction order. SlicedWasserstein is the
// t-th root of their mean; the per-direction terms are what a Monte-Carlo
// standard error is computed from.
std::vector<double> ProjectedCosts(const Matrix& u, const Matrix& v, OTOrder t,
                                   const DirectionSet& dirs);

double SlicedWasserstein(const Matrix& u, const Matrix& v, OTOrder t,
                         const DirectionSet& dirs);

// Mean absolute projection E|<theta, e>| of a fixed unit vector e onto a
// direction theta uniform on S^{d-1}:
// Gamma(d/2) / (sqrt(pi) Gamma((d+1)/2)). Equals 1 for d = 1, 2/pi for d = 2.
double MeanAbsProjection(std::size_t dim);

}  // namespace swfilter::sw

#endif  // SWFILTER_SW_CORE_HPP_
