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

// Boundary rows and single-field mutations for the LCPR validator.

#ifndef SWFILTER_TESTS_LCPR_FIXTURES_HPP_
#define SWFILTER_TESTS_LCPR_FIXTURES_HPP_

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "swfilter/csv.hpp"
#include "swfilter/lcpr.hpp"

namespace swfilter::testing {

inline std::string IntText(double v) { return std::to_string(static_cast<long long>(v)); }

// Row 0 holds every lower bound, row 1 every upper bound.
inline CsvTable LcprBoundaryTable(const lcpr::Schema& schema) {
  using lcpr::ColumnKind;
  CsvTable t;
  t.rows.assign(2, {});
  for (const auto& c : schema.columns) {
    t.header.push_back(c.name);
    std::string lo, hi;
    switch (c.kind) {
      case ColumnKind::kCategorical:
        lo = c.categories.front();
        hi = c.categories.back();
        break;
      case ColumnKind::kTimestamp:
        lo = "2022-01-01 00:00:00";
        hi = "2024-06-30 23:59:59";
        break;
      case ColumnKind::kDate:
        lo = c.date_min;
        hi = c.date_max;
        break;
      case ColumnKind::kIntegerRange:
        lo = IntText(c.min);
        hi = IntText(c.max);
        break;
      case ColumnKind::kRealRange:
        lo = FormatNumber(c.min);
        hi = FormatNumber(c.max);
        break;
      case ColumnKind::kFlag:
        lo = "0";
        hi = "1";
        break;
    }
    t.rows[0].push_back(lo);
    t.rows[1].push_back(hi);
  }
  return t;
}

struct LcprMutation {
  std::size_t column = 0;
  std::size_t row = 0;  // boundary row to edit
  std::string cell;
  std::string label;
};

// For every column and each of its two bounds, a value just outside it.
inline std::vector<LcprMutation> LcprMutations(const lcpr::Schema& schema) {
  using lcpr::ColumnKind;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<LcprMutation> out;
  for (std::size_t k = 0; k < schema.columns.size(); ++k) {
    const auto& c = schema.columns[k];
    std::string below, above;
    switch (c.kind) {
      case ColumnKind::kCategorical:
        below = "D";
        above = c.categories.back() + "x";
        break;
      case ColumnKind::kTimestamp:
        below = "2022-01-01T00:00:00";
        above = "2024-06-30 24:00:00";
        break;
      case ColumnKind::kDate:
        below = c.date_min == "2022-01-01" ? "2021-12-31" : "0000-00-00";
        above = c.date_max == "2024-06-30" ? "2024-07-01" : "9999-99-99";
        break;
      case ColumnKind::kIntegerRange:
        below = IntText(c.min - 1);
        above = IntText(c.max + 1);
        break;
      case ColumnKind::kRealRange:
        below = FormatNumber(std::nextafter(c.min, -kInf));
        above = FormatNumber(std::nextafter(c.max, kInf));
        break;
      case ColumnKind::kFlag:
        below = "-1";
        above = "2";
        break;
    }
    out.push_back({k, 0, below, c.name + " below"});
    out.push_back({k, 1, above, c.name + " above"});
  }
  return out;
}

}  // namespace swfilter::testing

#endif  // SWFILTER_TESTS_LCPR_FIXTURES_HPP_
