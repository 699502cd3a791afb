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

#include "swfilter/csv.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "swfilter/error.hpp"

namespace swfilter {
namespace {

namespace fs = std::filesystem;

fs::path TempPath(const std::string& name) {
  return fs::temp_directory_path() / ("swfilter_csv_" + name);
}

TEST(SplitCsvLineTest, QuotesAndWhitespace) {
  EXPECT_EQ(SplitCsvLine("a, b ,c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(SplitCsvLine(R"("x,y","say ""hi""",)"),
            (std::vector<std::string>{"x,y", R"(say "hi")", ""}));
  EXPECT_EQ(SplitCsvLine(""), (std::vector<std::string>{""}));
}

TEST(ParseNumberTest, FiniteOnly) {
  EXPECT_EQ(ParseNumber("1.5"), 1.5);
  EXPECT_EQ(ParseNumber("-2e3"), -2000.0);
  EXPECT_EQ(ParseNumber("+4"), 4.0);
  for (const char* bad : {"", "nan", "inf", "-inf", "1.5x", "oops", "1,5"}) {
    EXPECT_FALSE(ParseNumber(bad)) << bad;
  }
}

TEST(ReadCsvTest, SimpleMatrix) {
  const auto r = ParseCsv("a,b\n1,2\n3,4\n5,6\n", {});
  EXPECT_EQ(r.dataset.size(), 3u);
  EXPECT_EQ(r.dataset.dim(), 2u);
  EXPECT_EQ(r.dataset.values, (Matrix{{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(r.dataset.feature_names, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r.dropped_rows, 0u);
  EXPECT_FALSE(r.dataset.has_labels());
}

TEST(ReadCsvTest, DropsUnparseableRows) {
  const auto r = ParseCsv("1,2\n1, oops\n3,4\n", {.has_header = false});
  EXPECT_EQ(r.dataset.values, (Matrix{{1, 2}, {3, 4}}));
  EXPECT_EQ(r.dropped_rows, 1u);
  EXPECT_EQ(r.dropped_row_indices, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.dataset.feature_names, (std::vector<std::string>{"x0", "x1"}));
}

TEST(ReadCsvTest, LabelAndFeatureColumns) {
  CsvReadOptions opts;
  opts.label_column = "y";
  const auto r = ParseCsv("a,y,b\n1,0,2\n3,1,4\n5,2,6\n", opts);
  EXPECT_EQ(r.dataset.values, (Matrix{{1, 2}, {3, 4}}));
  EXPECT_EQ(r.dataset.truth_labels, (std::vector<bool>{false, true}));
  EXPECT_EQ(r.dropped_rows, 1u);  // label 2 is not 0/1

  opts.feature_columns = std::vector<std::string>{"b"};
  EXPECT_EQ(ParseCsv("a,y,b\n1,0,2\n", opts).dataset.values, (Matrix{{2}}));
  opts.feature_columns = std::vector<std::string>{"zz"};
  try {
    ParseCsv("a,y,b\n1,0,2\n", opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingColumn);
  }
  opts.feature_columns.reset();
  opts.label_column = "missing";
  EXPECT_THROW(ParseCsv("a,y,b\n1,0,2\n", opts), Error);
}

TEST(ReadCsvTest, Errors) {
  try {
    ParseCsv("a,b\n1,2\n3\n", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  try {
    ParseCsv("a,b\nx,y\n", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  try {
    ReadCsv("/nonexistent/file.csv", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(ReadCsvTest, BomAndBlankLines) {
  const auto r = ParseCsv("\xEF\xBB\xBF" "a\n\n1\r\n2\n\n", {});
  EXPECT_EQ(r.dataset.values, (Matrix{{1}, {2}}));
  EXPECT_EQ(r.dataset.feature_names[0], "a");
}

TEST(CsvRoundTripTest, RandomMatrices) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1e3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 20, d = 1 + rng() % 5;
    Matrix m(n, d);
    std::vector<bool> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = rng() & 1;
      for (std::size_t j = 0; j < d; ++j) m(i, j) = g(rng) * std::pow(10.0, int(rng() % 9) - 4);
    }
    Dataset ds = Dataset::FromMatrix(m);
    ds.truth_labels = labels;
    const std::string text = FormatCsv(ds);
    CsvReadOptions opts;
    opts.label_column = "label";
    const auto back = ParseCsv(text, opts);
    ASSERT_EQ(back.dataset.values, m);
    ASSERT_EQ(back.dataset.truth_labels, labels);
    EXPECT_EQ(back.dataset.feature_names, ds.feature_names);
  }
}

TEST(WriteFileAtomicTest, WritesAndReplaces) {
  const auto path = TempPath("atomic.txt");
  WriteFileAtomic(path.string(), "first");
  WriteFileAtomic(path.string(), "second\n");
  std::ifstream in(path);
  std::string s((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(s, "second\n");
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
  fs::remove(path);
  EXPECT_THROW(WriteFileAtomic("/nonexistent/dir/x.txt", "x"), Error);
}

TEST(ReadCsvTest, FromFile) {
  const auto path = TempPath("read.csv");
  WriteFileAtomic(path.string(), "u,v\n0.5,1\n");
  const auto r = ReadCsv(path.string(), {});
  EXPECT_EQ(r.dataset.values, (Matrix{{0.5, 1}}));
  EXPECT_EQ(r.dataset.provenance, path.string());
  fs::remove(path);
}

}  // namespace
}  // namespace swfilter
