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

#include <bit>

#include <gtest/gtest.h>

#include "swfilter/error.hpp"
#include "swfilter/generators.hpp"

namespace swfilter::eval {
namespace {

TEST(ConfusionTest, Examples) {
  EXPECT_EQ(Confusion({true, false, false}, {true, false, false}),
            (ConfusionCounts{1, 0, 2, 0}));
  EXPECT_EQ(Confusion({false, false, false, false, false},
                      {true, false, true, false, false}),
            (ConfusionCounts{0, 0, 3, 2}));
  EXPECT_EQ(Confusion({true, true, false, false}, {true, false, true, false}),
            (ConfusionCounts{1, 1, 1, 1}));
  EXPECT_THROW(Confusion({true}, {true, false}), Error);
}

TEST(MetricsTest, Examples) {
  auto m = ComputeMetrics({1, 1, 1, 1});
  EXPECT_EQ(m.accuracy, 0.5);
  EXPECT_EQ(m.precision, 0.5);
  m = ComputeMetrics({3, 0, 7, 0});
  EXPECT_EQ(m.accuracy, 1.0);
  EXPECT_EQ(m.precision, 1.0);
  m = ComputeMetrics({0, 0, 5, 2});
  EXPECT_EQ(m.accuracy, 5.0 / 7.0);
  EXPECT_FALSE(m.precision.has_value());
  EXPECT_THROW(ComputeMetrics({}), Error);
}

// Every (prediction, truth) pair on 4 samples, counted with bit masks.
TEST(MetricsTest, ExhaustiveFourSamples) {
  for (unsigned pred = 0; pred < 16; ++pred) {
    for (unsigned truth = 0; truth < 16; ++truth) {
      std::vector<bool> p(4), t(4);
      for (int b = 0; b < 4; ++b) {
        p[b] = (pred >> b) & 1u;
        t[b] = (truth >> b) & 1u;
      }
      const unsigned tp = std::popcount(pred & truth);
      const unsigned fp = std::popcount(pred & ~truth & 15u);
      const unsigned fn = std::popcount(~pred & truth & 15u);
      const unsigned tn = 4 - tp - fp - fn;
      const auto c = Confusion(p, t);
      ASSERT_EQ(c, (ConfusionCounts{tp, fp, tn, fn}));
      const auto m = ComputeMetrics(c);
      EXPECT_EQ(m.accuracy, (tp + tn) / 4.0);
      if (tp + fp > 0) {
        EXPECT_EQ(m.precision, static_cast<double>(tp) / (tp + fp));
      } else {
        EXPECT_FALSE(m.precision);
      }
    }
  }
}

TEST(GridSpecTest, ParseAndPoints) {
  const auto spec = GridSpec::FromJson(nlohmann::json::parse(
      R"({"model": "swad", "axes": {"p": [0.5, 0.9], "epsilon": [0.1, 0.2, 0.3]}})"));
  EXPECT_EQ(spec.model, Model::kSwad);
  const auto pts = spec.Points();
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0], (ParamPoint{{"epsilon", 0.1}, {"p", 0.5}}));
  EXPECT_EQ(pts[1], (ParamPoint{{"epsilon", 0.1}, {"p", 0.9}}));
  EXPECT_EQ(GridSpec::FromJson(nlohmann::json::parse(R"({"model":"lof"})")).Points().size(), 1u);
}

TEST(GridSpecTest, RejectsMalformed) {
  for (const char* text : {
           R"([1,2])",
           R"({"axes": {}})",
           R"({"model": "forest"})",
           R"({"model": "swad", "axes": {"eta": [1]}})",
           R"({"model": "swad", "axes": {"p": []}})",
           R"({"model": "swad", "axes": {"p": [1.5]}})",
           R"({"model": "swad", "axes": {"epsilon": [0]}})",
           R"({"model": "fead", "axes": {"n": [2.5]}})",
           R"({"model": "knn", "axes": {"k": ["3"]}})",
       }) {
    try {
      GridSpec::FromJson(nlohmann::json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << text;
    }
  }
}

TEST(BetterThanTest, TieBreaks) {
  EvalResult a{{}, 0.9, 0.5, {{"x", 2}}};
  EvalResult b{{}, 0.8, 1.0, {{"x", 1}}};
  EXPECT_TRUE(BetterThan(a, b));
  b.accuracy = 0.9;
  EXPECT_TRUE(BetterThan(b, a));  // precision decides
  b.precision.reset();
  EXPECT_TRUE(BetterThan(a, b));  // undefined precision ranks lowest
  b.precision = 0.5;
  EXPECT_TRUE(BetterThan(b, a));  // smaller parameter tuple
  EXPECT_FALSE(BetterThan(a, a));
}

TEST(GridSearchTest, SinglePoint) {
  const Dataset d = GeneratePlantedOutliers(10, 1, 1);
  GridSpec spec;
  spec.model = Model::kFead;
  spec.axes["eta"] = {50};
  const auto res = GridSearch(d, spec, 0);
  ASSERT_EQ(res.results.size(), 1u);
  EXPECT_EQ(res.best, res.results[0]);
}

// eps = 1 sits between the inlier bound sqrt(2)/10 and the outlier
// statistic (> 99 * 0.5 / 10), so that grid point recovers the outlier.
TEST(GridSearchTest, PerfectConfigurationIsFound) {
  const Dataset d = GeneratePlantedOutliers(10, 1, 2);
  GridSpec spec;
  spec.model = Model::kSwad;
  spec.axes["epsilon"] = {0.001, 1.0, 1000.0};
  spec.axes["p"] = {0.9};
  spec.axes["n"] = {10};
  const auto res = GridSearch(d, spec, 3, 2);
  ASSERT_EQ(res.results.size(), 3u);
  EXPECT_EQ(res.best.accuracy, 1.0);
  EXPECT_EQ(res.best.params.at("epsilon"), 1.0);
  for (const auto& r : res.results) EXPECT_GE(res.best.accuracy, r.accuracy);
  EXPECT_EQ(GridSearch(d, spec, 3, 1).results, res.results);
}

TEST(GridSearchTest, ExplicitThresholdAxis) {
  Dataset d = Dataset::FromMatrix(Matrix{{0}, {10}, {11}, {12}});
  d.truth_labels = std::vector<bool>{true, true, false, false};
  GridSpec spec;
  spec.model = Model::kKnn;
  spec.axes["k"] = {1};
  spec.axes["threshold"] = {1.5, 100};
  // k=1 scores: [10, 1, 1, 1]. threshold 1.5 -> {0}: tp1 fp0 tn2 fn1, A 0.75,
  // P 1. threshold 100 -> {}: A 0.5.
  const auto res = GridSearch(d, spec, 0);
  EXPECT_EQ(res.best.params.at("threshold"), 1.5);
  EXPECT_EQ(res.best.precision, 1.0);
}

TEST(GridSearchTest, ScoreSweepAndLofPlanted) {
  const Dataset d = GeneratePlantedOutliers(10, 2, 9);
  GridSpec spec;
  spec.model = Model::kLof;
  spec.axes["k"] = {3};
  const auto res = GridSearch(d, spec, 0);
  EXPECT_GE(res.results.size(), 2u);
  EXPECT_EQ(res.best.accuracy, 1.0);
}

TEST(GridSearchTest, RequiresLabels) {
  Dataset d = GeneratePlantedOutliers(10, 1, 1);
  d.truth_labels.reset();
  try {
    GridSearch(d, GridSpec{}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingLabels);
  }
}

TEST(ResultsCsvTest, Layout) {
  std::vector<EvalResult> rs{{{1, 0, 2, 0}, 1.0, 1.0, {{"eta", 3}}},
                             {{0, 0, 2, 1}, 2.0 / 3, std::nullopt, {{"eta", 9}}}};
  const std::string csv = ResultsCsv(rs);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "eta,tp,fp,tn,fn,accuracy,precision");
  EXPECT_NE(csv.find("\n3,1,0,2,0,1,1\n"), std::string::npos);
  EXPECT_EQ(csv.back(), '\n');
  EXPECT_NE(csv.find(",0,0,2,1,0.6666666666666666,\n"), std::string::npos);
}

}  // namespace
}  // namespace swfilter::eval
