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

#include "swfilter/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "swfilter/error.hpp"
#include "swfilter/random.hpp"

namespace swfilter {

namespace {

Matrix ScaledIdentity(std::size_t d, double variance) {
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = variance;
  return m;
}

void AppendGaussian(const GaussianGroup& group, Rng& rng, Matrix& out) {
  const std::size_t d = group.mean.size();
  const Matrix chol = PsdCholesky(group.cov);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> z(d), x(d);
  for (std::size_t s = 0; s < group.count; ++s) {
    for (double& v : z) v = normal(rng);
    for (std::size_t r = 0; r < d; ++r) {
      double acc = group.mean[r];
      for (std::size_t c = 0; c <= r; ++c) acc += chol(r, c) * z[c];
      x[r] = acc;
    }
    out.AppendRow(x);
  }
}

void AppendUniformOutliers(std::size_t count, Rng& rng, Matrix& out,
                           std::vector<bool>& labels) {
  std::uniform_real_distribution<double> unif(-6.0, 6.0);
  for (std::size_t s = 0; s < count; ++s) {
    const double p[2] = {unif(rng), unif(rng)};
    out.AppendRow(p);
    labels.push_back(true);
  }
}

}  // namespace

Matrix PsdCholesky(const Matrix& cov) {
  const std::size_t d = cov.rows();
  if (cov.cols() != d || d == 0) {
    throw Error(ErrorCode::kInvalidArgument, "covariance must be square");
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < d; ++i) scale = std::max(scale, std::fabs(cov(i, i)));
  const double tol = 1e-12 * std::max(1.0, scale);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (std::fabs(cov(r, c) - cov(c, r)) > tol) {
        throw Error(ErrorCode::kInvalidArgument, "covariance is not symmetric");
      }
    }
  }
  Matrix l(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    double pivot = cov(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (pivot < -tol) {
      throw Error(ErrorCode::kInvalidArgument,
                  "covariance is not positive semi-definite");
    }
    if (pivot <= tol) {
      // Degenerate direction: the remainder of column j must vanish too.
      for (std::size_t i = j + 1; i < d; ++i) {
        double v = cov(i, j);
        for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
        if (std::fabs(v) > std::sqrt(tol)) {
          throw Error(ErrorCode::kInvalidArgument,
                      "covariance is not positive semi-definite");
        }
      }
      continue;
    }
    const double diag = std::sqrt(pivot);
    l(j, j) = diag;
    for (std::size_t i = j + 1; i < d; ++i) {
      double v = cov(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / diag;
    }
  }
  return l;
}

ThreeGaussianParams ThreeGaussianParams::Default(std::size_t n_major,
                                                 std::size_t n_minor,
                                                 std::size_t n_outlier) {
  ThreeGaussianParams p;
  p.majority = {n_major, {0.0, 0.0}, ScaledIdentity(2, 1.0)};
  p.minority = {n_minor, {5.0, 5.0}, ScaledIdentity(2, 0.16)};
  p.outliers = {n_outlier, {-10.0, 10.0}, ScaledIdentity(2, 2.25)};
  return p;
}

Dataset GenerateThreeGaussians(const ThreeGaussianParams& params,
                               std::uint64_t seed) {
  const GaussianGroup* groups[] = {&params.majority, &params.minority,
                                   &params.outliers};
  const std::size_t d = params.majority.mean.size();
  std::size_t total = 0;
  for (const auto* g : groups) {
    if (g->mean.size() != d || g->cov.rows() != d || g->cov.cols() != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "all groups must share one dimension");
    }
    total += g->count;
  }
  if (d == 0 || total == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "three-gaussian mixture needs a dimension and a sample");
  }
  Rng rng = MakeRng(seed, Stream::kGenerator);
  Dataset ds;
  ds.values = Matrix(0, d);
  ds.feature_names = DefaultFeatureNames(d);
  for (const auto* g : groups) AppendGaussian(*g, rng, ds.values);
  std::vector<bool> labels(total, false);
  for (std::size_t i = total - params.outliers.count; i < total; ++i) {
    labels[i] = true;
  }
  ds.truth_labels = std::move(labels);
  ds.provenance = "three-gaussians seed=" + std::to_string(seed);
  return ds;
}

ToyKind ParseToyKind(std::string_view name) {
  if (name == "blobs") return ToyKind::kBlobs;
  if (name == "moons") return ToyKind::kMoons;
  if (name == "circles") return ToyKind::kCircles;
  if (name == "anisotropic") return ToyKind::kAnisotropic;
  if (name == "uniform_noise" || name == "uniform-noise") {
    return ToyKind::kUniformNoise;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown toy dataset kind '" + std::string(name) + "'");
}

std::string_view ToyKindName(ToyKind kind) {
  switch (kind) {
    case ToyKind::kBlobs: return "blobs";
    case ToyKind::kMoons: return "moons";
    case ToyKind::kCircles: return "circles";
    case ToyKind::kAnisotropic: return "anisotropic";
    case ToyKind::kUniformNoise: return "uniform_noise";
  }
  return "unknown";
}

Dataset GenerateToy(ToyKind kind, const ToyOptions& options) {
  if (options.n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "toy dataset needs n >= 1");
  }
  if (!(options.noise >= 0.0) || !std::isfinite(options.noise)) {
    throw Error(ErrorCode::kInvalidArgument, "noise must be >= 0");
  }
  if (!(options.outlier_fraction >= 0.0) || options.outlier_fraction > 10.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "outlier fraction must be in [0, 10]");
  }
  if ((kind == ToyKind::kBlobs || kind == ToyKind::kAnisotropic) &&
      options.blob_centers == 0) {
    throw Error(ErrorCode::kInvalidArgument, "blobs need at least one center");
  }
  Rng rng = MakeRng(options.seed, Stream::kGenerator);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double pi = std::numbers::pi;
  const std::size_t n = options.n;

  Dataset ds;
  ds.values = Matrix(0, 2);
  ds.feature_names = DefaultFeatureNames(2);
  std::vector<bool> labels;
  auto emit = [&](double x, double y) {
    if (options.noise > 0.0) {
      x += options.noise * normal(rng);
      y += options.noise * normal(rng);
    }
    const double p[2] = {x, y};
    ds.values.AppendRow(p);
    labels.push_back(false);
  };

  switch (kind) {
    case ToyKind::kBlobs:
    case ToyKind::kAnisotropic: {
      const std::size_t k = options.blob_centers;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t c = i % k;
        double cx = 0.0, cy = 0.0;
        if (k > 1) {
          const double a = 2.0 * pi * static_cast<double>(c) / static_cast<double>(k);
          cx = 3.0 * std::cos(a);
          cy = 3.0 * std::sin(a);
        }
        double x = cx + (options.noise > 0.0 ? options.noise * normal(rng) : 0.0);
        double y = cy + (options.noise > 0.0 ? options.noise * normal(rng) : 0.0);
        if (kind == ToyKind::kAnisotropic) {
          const double ax = 0.6 * x - 0.4 * y;
          const double ay = -0.6 * x + 0.8 * y;
          x = ax;
          y = ay;
        }
        const double p[2] = {x, y};
        ds.values.AppendRow(p);
        labels.push_back(false);
      }
      break;
    }
    case ToyKind::kMoons: {
      const std::size_t upper = (n + 1) / 2;
      const std::size_t lower = n - upper;
      for (std::size_t i = 0; i < upper; ++i) {
        const double s = upper > 1 ? pi * static_cast<double>(i) / static_cast<double>(upper - 1) : 0.0;
        emit(std::cos(s), std::sin(s));
      }
      for (std::size_t i = 0; i < lower; ++i) {
        const double s = lower > 1 ? pi * static_cast<double>(i) / static_cast<double>(lower - 1) : 0.0;
        emit(1.0 - std::cos(s), 0.5 - std::sin(s));
      }
      break;
    }
    case ToyKind::kCircles: {
      const std::size_t outer = (n + 1) / 2;
      const std::size_t inner = n - outer;
      for (std::size_t i = 0; i < outer; ++i) {
        const double s = 2.0 * pi * static_cast<double>(i) / static_cast<double>(outer);
        emit(std::cos(s), std::sin(s));
      }
      for (std::size_t i = 0; i < inner; ++i) {
        const double s = 2.0 * pi * static_cast<double>(i) / static_cast<double>(inner);
        emit(options.circle_factor * std::cos(s),
             options.circle_factor * std::sin(s));
      }
      break;
    }
    case ToyKind::kUniformNoise: {
      std::uniform_real_distribution<double> unif(-7.0, 7.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double p[2] = {unif(rng), unif(rng)};
        ds.values.AppendRow(p);
        labels.push_back(false);
      }
      break;
    }
  }

  const auto n_out = static_cast<std::size_t>(
      std::floor(options.outlier_fraction * static_cast<double>(n)));
  AppendUniformOutliers(n_out, rng, ds.values, labels);
  ds.truth_labels = std::move(labels);
  ds.provenance = std::string(ToyKindName(kind)) +
                  " seed=" + std::to_string(options.seed);
  return ds;
}

Dataset GeneratePlantedOutliers(std::size_t inliers, std::size_t replicas,
                                std::uint64_t seed) {
  if (inliers == 0 || replicas == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "planted-outlier instance needs inliers and replicas");
  }
  Rng rng = MakeRng(seed, Stream::kGenerator);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Dataset ds;
  ds.values = Matrix(0, 2);
  ds.feature_names = DefaultFeatureNames(2);
  std::vector<bool> labels;
  for (std::size_t r = 0; r < replicas; ++r) {
    for (std::size_t i = 0; i < inliers; ++i) {
      const double p[2] = {unif(rng), unif(rng)};
      ds.values.AppendRow(p);
      labels.push_back(false);
    }
    const double far[2] = {100.0, 100.0};
    ds.values.AppendRow(far);
    labels.push_back(true);
  }
  ds.truth_labels = std::move(labels);
  ds.provenance = "planted seed=" + std::to_string(seed);
  return ds;
}

}  // namespace swfilter
