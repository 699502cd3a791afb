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

#include "swfilter/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "parallel.hpp"
#include "swfilter/baseline.hpp"
#include "swfilter/csv.hpp"
#include "swfilter/error.hpp"

namespace swfilter::eval {

namespace {

struct AxisRule {
  const char* name;
  bool integral;
  double min;
  double max;
  bool min_exclusive;
};

constexpr double kInf = 1e308;

const std::vector<AxisRule>& RulesFor(Model model) {
  static const std::vector<AxisRule> swad = {
      {"epsilon", false, 0, kInf, true}, {"p", false, 0, 1, false},
      {"n", true, 1, kInf, false},       {"L", true, 1, kInf, false},
      {"t", false, 1, kInf, false},      {"chunk_size", true, 4, kInf, false},
      {"threshold_mode", true, 0, 1, false}};
  static const std::vector<AxisRule> fead = {
      {"eta", false, 0, kInf, false}, {"p", false, 0, 1, false},
      {"n", true, 1, kInf, false}};
  static const std::vector<AxisRule> score = {
      {"k", true, 1, kInf, false}, {"threshold", false, -kInf, kInf, false}};
  switch (model) {
    case Model::kSwad: return swad;
    case Model::kFead: return fead;
    case Model::kLof:
    case Model::kKnn: return score;
  }
  return score;
}

[[noreturn]] void ParseFail(const std::string& msg) {
  throw Error(ErrorCode::kParse, "grid spec: " + msg);
}

EvalResult Evaluate(const std::vector<bool>& predicted,
                    const std::vector<bool>& truth, ParamPoint params) {
  EvalResult r;
  r.counts = Confusion(predicted, truth);
  const Metrics m = ComputeMetrics(r.counts);
  r.accuracy = m.accuracy;
  r.precision = m.precision;
  r.params = std::move(params);
  return r;
}

}  // namespace

ConfusionCounts Confusion(const std::vector<bool>& predicted,
                          const std::vector<bool>& truth) {
  if (predicted.size() != truth.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "prediction and truth lengths differ (" +
                    std::to_string(predicted.size()) + " vs " +
                    std::to_string(truth.size()) + ")");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predicted[i]) {
      truth[i] ? ++c.tp : ++c.fp;
    } else {
      truth[i] ? ++c.fn : ++c.tn;
    }
  }
  return c;
}

Metrics ComputeMetrics(const ConfusionCounts& counts) {
  if (counts.total() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "metrics of an empty evaluation");
  }
  Metrics m;
  m.accuracy = static_cast<double>(counts.tp + counts.tn) /
               static_cast<double>(counts.total());
  if (counts.tp + counts.fp > 0) {
    m.precision = static_cast<double>(counts.tp) /
                  static_cast<double>(counts.tp + counts.fp);
  }
  return m;
}

std::string_view ModelName(Model model) {
  switch (model) {
    case Model::kSwad: return "swad";
    case Model::kFead: return "fead";
    case Model::kLof: return "lof";
    case Model::kKnn: return "knn";
  }
  return "unknown";
}

Model ParseModel(std::string_view name) {
  for (auto m : {Model::kSwad, Model::kFead, Model::kLof, Model::kKnn}) {
    if (ModelName(m) == name) return m;
  }
  throw Error(ErrorCode::kParse, "unknown model '" + std::string(name) + "'");
}

std::vector<ParamPoint> GridSpec::Points() const {
  std::vector<ParamPoint> points(1);
  for (const auto& [name, values] : axes) {
    std::vector<ParamPoint> next;
    next.reserve(points.size() * values.size());
    for (const auto& p : points) {
      for (double v : values) {
        ParamPoint q = p;
        q[name] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

nlohmann::json GridSpec::ToJson() const {
  return {{"model", ModelName(model)}, {"axes", axes}};
}

GridSpec GridSpec::FromJson(const nlohmann::json& j) {
  if (!j.is_object()) ParseFail("top level must be an object");
  if (!j.contains("model") || !j["model"].is_string()) {
    ParseFail("missing string field 'model'");
  }
  GridSpec spec;
  spec.model = ParseModel(j["model"].get<std::string>());
  if (j.contains("axes")) {
    if (!j["axes"].is_object()) ParseFail("'axes' must be an object");
    const auto& rules = RulesFor(spec.model);
    for (const auto& [name, values] : j["axes"].items()) {
      const auto rule = std::find_if(rules.begin(), rules.end(),
                                     [&](const AxisRule& r) { return r.name == name; });
      if (rule == rules.end()) {
        ParseFail("axis '" + name + "' is not valid for model " +
                  std::string(ModelName(spec.model)));
      }
      if (!values.is_array() || values.empty()) {
        ParseFail("axis '" + name + "' must be a non-empty array");
      }
      std::vector<double> parsed;
      for (const auto& v : values) {
        if (!v.is_number()) ParseFail("axis '" + name + "' holds a non-number");
        const double x = v.get<double>();
        const bool below = rule->min_exclusive ? x <= rule->min : x < rule->min;
        if (!std::isfinite(x) || below || x > rule->max ||
            (rule->integral && x != std::floor(x))) {
          ParseFail("axis '" + name + "' value " + FormatNumber(x) +
                    " is out of range");
        }
        parsed.push_back(x);
      }
      spec.axes[name] = std::move(parsed);
    }
  }
  return spec;
}

GridSpec GridSpec::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open grid spec '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    ParseFail(std::string("not valid JSON: ") + e.what());
  }
  return FromJson(j);
}

bool BetterThan(const EvalResult& a, const EvalResult& b) {
  if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
  if (a.precision != b.precision) {
    if (!b.precision) return true;
    if (!a.precision) return false;
    return *a.precision > *b.precision;
  }
  std::vector<double> ka, kb;
  for (const auto& [k, v] : a.params) ka.push_back(v);
  for (const auto& [k, v] : b.params) kb.push_back(v);
  return ka < kb;
}

filter::FilterConfig ConfigForPoint(const filter::FilterConfig& base,
                                    const ParamPoint& point,
                                    std::uint64_t seed) {
  filter::FilterConfig cfg = base;
  cfg.seed = seed;
  cfg.workers = 1;
  for (const auto& [name, v] : point) {
    if (name == "epsilon") cfg.epsilon = v;
    else if (name == "eta") cfg.eta = v;
    else if (name == "p") cfg.p = v;
    else if (name == "n") cfg.votes = static_cast<std::size_t>(v);
    else if (name == "L") cfg.projections = static_cast<std::size_t>(v);
    else if (name == "t") cfg.t = v;
    else if (name == "chunk_size") cfg.chunk_size = static_cast<std::size_t>(v);
    else if (name == "threshold_mode") {
      cfg.threshold_mode = v == 0.0 ? filter::ThresholdMode::kRaw
                                    : filter::ThresholdMode::kNormalized;
    }
  }
  return cfg;
}

GridSearchResult GridSearch(const Dataset& data, const GridSpec& grid,
                            std::uint64_t seed, std::size_t workers,
                            const filter::FilterConfig& base) {
  if (!data.truth_labels) {
    throw Error(ErrorCode::kMissingLabels,
                "grid search needs ground-truth labels");
  }
  data.Validate();
  const auto& truth = *data.truth_labels;
  GridSearchResult out;

  if (grid.model == Model::kSwad || grid.model == Model::kFead) {
    const auto points = grid.Points();
    out.results.resize(points.size());
    internal::ParallelFor(points.size(), workers, [&](std::size_t g) {
      const auto cfg = ConfigForPoint(base, points[g], seed);
      filter::FilterReport rep;
      if (grid.model == Model::kFead) {
        rep = filter::Fead(data, cfg);
      } else if (cfg.chunk_size) {
        rep = filter::ChunkedSwad(data, cfg);
      } else {
        rep = filter::Swad(data, cfg);
      }
      out.results[g] = Evaluate(rep.flags, truth, points[g]);
    });
  } else {
    GridSpec ks = grid;
    ks.axes.erase("threshold");
    if (!ks.axes.count("k")) ks.axes["k"] = {5};
    const auto k_points = ks.Points();
    std::vector<std::vector<EvalResult>> per_k(k_points.size());
    internal::ParallelFor(k_points.size(), workers, [&](std::size_t g) {
      const auto k = static_cast<std::size_t>(k_points[g].at("k"));
      const auto scores = grid.model == Model::kLof
                              ? baseline::LofScore(data.values, k)
                              : baseline::KnnScore(data.values, k);
      std::vector<double> thresholds;
      if (auto it = grid.axes.find("threshold"); it != grid.axes.end()) {
        thresholds = it->second;
      } else {
        std::set<double> distinct(scores.begin(), scores.end());
        thresholds.assign(distinct.begin(), distinct.end());
      }
      std::vector<bool> pred(scores.size());
      for (double th : thresholds) {
        for (std::size_t i = 0; i < scores.size(); ++i) pred[i] = scores[i] >= th;
        ParamPoint params = k_points[g];
        params["threshold"] = th;
        per_k[g].push_back(Evaluate(pred, truth, std::move(params)));
      }
    });
    for (auto& v : per_k) {
      for (auto& r : v) out.results.push_back(std::move(r));
    }
  }

  out.best = out.results.front();
  for (const auto& r : out.results) {
    if (BetterThan(r, out.best)) out.best = r;
  }
  return out;
}

std::string ResultsCsv(const std::vector<EvalResult>& results) {
  std::string out;
  std::vector<std::string> keys;
  if (!results.empty()) {
    for (const auto& [k, v] : results.front().params) keys.push_back(k);
  }
  for (const auto& k : keys) out += k + ",";
  out += "tp,fp,tn,fn,accuracy,precision\n";
  for (const auto& r : results) {
    for (const auto& k : keys) {
      const auto it = r.params.find(k);
      if (it != r.params.end()) out += FormatNumber(it->second);
      out += ",";
    }
    out += std::to_string(r.counts.tp) + "," + std::to_string(r.counts.fp) +
           "," + std::to_string(r.counts.tn) + "," +
           std::to_string(r.counts.fn) + "," + FormatNumber(r.accuracy) + ",";
    if (r.precision) out += FormatNumber(*r.precision);
    out += "\n";
  }
  return out;
}

nlohmann::json ResultJson(const EvalResult& r) {
  return {{"params", r.params},
          {"tp", r.counts.tp},
          {"fp", r.counts.fp},
          {"tn", r.counts.tn},
          {"fn", r.counts.fn},
          {"accuracy", r.accuracy},
          {"precision", r.precision ? nlohmann::json(*r.precision)
                                    : nlohmann::json(nullptr)}};
}

}  // namespace swfilter::eval
