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

// Confusion counts, accuracy / precision, and the best-accuracy grid search
// used to compare detectors on labelled data. The positive class is
// "outlier".

#ifndef SWFILTER_EVAL_HPP_
#define SWFILTER_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "swfilter/dataset.hpp"
#include "swfilter/filter.hpp"

namespace swfilter::eval {

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;

  std::size_t total() const noexcept { return tp + fp + tn + fn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

ConfusionCounts Confusion(const std::vector<bool>& predicted,
                          const std::vector<bool>& truth);

struct Metrics {
  double accuracy = 0.0;
  // Undefined (nullopt) when nothing was predicted positive.
  std::optional<double> precision;
};

Metrics ComputeMetrics(const ConfusionCounts& counts);

using ParamPoint = std::map<std::string, double>;

struct EvalResult {
  ConfusionCounts counts;
  double accuracy = 0.0;
  std::optional<double> precision;
  ParamPoint params;

  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

enum class Model { kSwad, kFead, kLof, kKnn };

std::string_view ModelName(Model model);
Model ParseModel(std::string_view name);

// Axes by model (values are numbers; integer axes must be integral):
//   swad  epsilon, p, n, L, t, chunk_size, threshold_mode (0 raw, 1 normalized)
//   fead  eta, p, n
//   lof / knn  k, threshold
// A non-empty chunk_size axis makes swad run chunked. Without a threshold
// axis the score-based models sweep every distinct score as a threshold
// (flag when score >= threshold).
struct GridSpec {
  Model model = Model::kSwad;
  std::map<std::string, std::vector<double>> axes;

  // Every combination of axis values, keys in name order and the last
  // axis varying fastest.
  std::vector<ParamPoint> Points() const;

  nlohmann::json ToJson() const;
  // Throws kParse on unknown models or axes, empty axes and values outside
  // the parameter's valid range.
  static GridSpec FromJson(const nlohmann::json& j);
  static GridSpec Load(const std::string& path);
};

// True when a should be preferred over b: higher accuracy, then higher
// precision (undefined ranks lowest), then the lexicographically smaller
// parameter tuple.
bool BetterThan(const EvalResult& a, const EvalResult& b);

struct GridSearchResult {
  std::vector<EvalResult> results;  // grid order
  EvalResult best;
};

// `base` supplies every filter setting not named by an axis.
GridSearchResult GridSearch(const Dataset& data, const GridSpec& grid,
                            std::uint64_t seed, std::size_t workers = 1,
                            const filter::FilterConfig& base = {});

filter::FilterConfig ConfigForPoint(const filter::FilterConfig& base,
                                    const ParamPoint& point,
                                    std::uint64_t seed);

// One row per result: parameter columns (name order), tp, fp, tn, fn,
// accuracy, precision (empty when undefined).
std::string ResultsCsv(const std::vector<EvalResult>& results);
nlohmann::json ResultJson(const EvalResult& result);

}  // namespace swfilter::eval

#endif  // SWFILTER_EVAL_HPP_
