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

#include "swfilter/sw_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "swfilter/error.hpp"
#include "swfilter/random.hpp"

namespace swfilter::sw {

OTOrder::OTOrder(double t) : t_(t) {
  if (!(t >= 1.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Wasserstein order t must be finite and >= 1, got " +
                    std::to_string(t));
  }
}

double OTOrder::Cost(double x) const noexcept {
  const double a = std::fabs(x);
  if (t_ == 1.0) return a;
  if (t_ == 2.0) return a * a;
  return std::pow(a, t_);
}

double OTOrder::Root(double m) const noexcept {
  if (t_ == 1.0) return m;
  if (t_ == 2.0) return std::sqrt(m);
  return std::pow(m, 1.0 / t_);
}

Projection1D::Projection1D(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "projection must be non-empty");
  }
  std::stable_sort(values_.begin(), values_.end());
}

DirectionSet DirectionSet::Sample(std::size_t dim, std::size_t count,
                                  std::uint64_t seed) {
  if (dim == 0 || count == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "direction set needs d >= 1 and L >= 1");
  }
  Rng rng = MakeRng(seed, Stream::kDirections);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix dirs(count, dim);
  for (std::size_t l = 0; l < count; ++l) {
    auto v = dirs.row(l);
    double norm = 0.0;
    // A zero draw has probability zero but would break normalization.
    while (norm == 0.0) {
      for (double& x : v) x = normal(rng);
      norm = std::sqrt(Dot(v, v));
    }
    for (double& x : v) x /= norm;
  }
  return DirectionSet(std::move(dirs), seed);
}

DirectionSet DirectionSet::FromVectors(const Matrix& directions) {
  if (directions.rows() == 0 || directions.cols() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty direction set");
  }
  for (std::size_t l = 0; l < directions.rows(); ++l) {
    const double norm = std::sqrt(Dot(directions.row(l), directions.row(l)));
    if (std::fabs(norm - 1.0) > 1e-6) {
      throw Error(ErrorCode::kInvalidArgument,
                  "direction " + std::to_string(l) + " has norm " +
                      std::to_string(norm) + ", expected 1");
    }
  }
  return DirectionSet(directions, 0);
}

std::vector<double> Project(const Matrix& points,
                            std::span<const double> direction) {
  if (points.cols() != direction.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "points have d=" + std::to_string(points.cols()) +
                    " but direction has d=" + std::to_string(direction.size()));
  }
  const double norm = std::sqrt(Dot(direction, direction));
  if (std::fabs(norm - 1.0) > 1e-6) {
    throw Error(ErrorCode::kInvalidArgument,
                "projection direction has norm " + std::to_string(norm));
  }
  std::vector<double> out(points.rows());
  for (std::size_t i = 0; i < points.rows(); ++i) {
    out[i] = Dot(points.row(i), direction);
  }
  return out;
}

namespace {

double SortedCost(std::span<const double> xs, std::span<const double> ys,
                  const OTOrder& t) {
  double total = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) total += t.Cost(xs[i] - ys[i]);
  return total / static_cast<double>(xs.size());
}

void CheckSizes(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Wasserstein distance of an empty distribution");
  }
  if (m != k) {
    throw Error(ErrorCode::kSizeMismatch,
                "equal-size distributions required, got " + std::to_string(m) +
                    " and " + std::to_string(k));
  }
}

}  // namespace

double Wasserstein1D(std::span<const double> xs, std::span<const double> ys,
                     OTOrder t) {
  CheckSizes(xs.size(), ys.size());
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return t.Root(SortedCost(a, b, t));
}

double Wasserstein1D(const Projection1D& xs, const Projection1D& ys,
                     OTOrder t) {
  CheckSizes(xs.size(), ys.size());
  return t.Root(SortedCost(xs.values(), ys.values(), t));
}

std::vector<double> ProjectedCosts(const Matrix& u, const Matrix& v, OTOrder t,
                                   const DirectionSet& dirs) {
  CheckSizes(u.rows(), v.rows());
  if (u.cols() != dirs.dim() || v.cols() != dirs.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "distributions and directions disagree on dimension");
  }
  std::vector<double> costs(dirs.size());
  for (std::size_t l = 0; l < dirs.size(); ++l) {
    std::vector<double> pu = Project(u, dirs.direction(l));
    std::vector<double> pv = Project(v, dirs.direction(l));
    std::sort(pu.begin(), pu.end());
    std::sort(pv.begin(), pv.end());
    costs[l] = SortedCost(pu, pv, t);
  }
  return costs;
}

double SlicedWasserstein(const Matrix& u, const Matrix& v, OTOrder t,
                         const DirectionSet& dirs) {
  const std::vector<double> costs = ProjectedCosts(u, v, t, dirs);
  double total = 0.0;
  for (double c : costs) total += c;
  return t.Root(total / static_cast<double>(costs.size()));
}

double MeanAbsProjection(std::size_t dim) {
  if (dim == 0) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be >= 1");
  }
  const double d = static_cast<double>(dim);
  return std::exp(std::lgamma(d / 2.0) - std::lgamma((d + 1.0) / 2.0)) /
         std::sqrt(std::numbers::pi);
}

}  // namespace swfilter::sw
