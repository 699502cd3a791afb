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

// Schema and validator for the hourly LCPR substation dataset.
//
// Declared bounds are the observed ranges of the published data, not
// physical limits. A reading can sit inside them and still be impossible,
// which is what the separate plausibility caps are for.

#ifndef SWFILTER_LCPR_HPP_
#define SWFILTER_LCPR_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "swfilter/csv.hpp"

namespace swfilter::lcpr {

enum class ColumnKind {
  kCategorical,   // one of `categories`
  kTimestamp,     // YYYY-MM-DD hh:mm:ss
  kDate,          // YYYY-MM-DD within [date_min, date_max]
  kIntegerRange,  // integer within [min, max]
  kRealRange,     // real within [min, max]
  kFlag,          // 0 or 1
};

std::string_view ColumnKindName(ColumnKind kind);
ColumnKind ParseColumnKind(std::string_view name);

struct ColumnSpec {
  std::string name;
  ColumnKind kind = ColumnKind::kRealRange;
  std::string description;
  std::string unit;
  std::vector<std::string> categories;
  double min = 0.0;
  double max = 0.0;
  std::string date_min;
  std::string date_max;
};

struct Schema {
  std::string name;
  int version = 0;
  std::vector<ColumnSpec> columns;

  const ColumnSpec* Find(std::string_view column) const;

  nlohmann::json ToJson() const;
  static Schema FromJson(const nlohmann::json& j);  // throws kParse
  static Schema Load(const std::string& path);
};

// The 23 published columns (22 features and the energy label).
const Schema& BuiltinSchema();

struct ColumnViolations {
  std::size_t count = 0;
  std::vector<std::size_t> rows;  // 0-based data rows, first `row_cap` only
};

struct PlausibilityWarning {
  std::string column;
  double cap = 0.0;
  std::size_t count = 0;
  std::vector<std::size_t> rows;  // capped like ColumnViolations::rows
};

struct ValidationReport {
  std::string schema_name;
  int schema_version = 0;
  std::size_t rows_checked = 0;
  std::size_t row_cap = 0;
  // One entry per schema column, in schema order.
  std::vector<std::pair<std::string, ColumnViolations>> violations;
  std::vector<PlausibilityWarning> plausibility;

  std::size_t total_violations() const;
  const ColumnViolations* For(std::string_view column) const;
  nlohmann::json ToJson() const;
};

struct ValidateOptions {
  // Upper caps per column; values strictly above a cap are reported as
  // plausibility warnings, independent of schema bounds.
  std::map<std::string, double> plausibility_caps;
  std::size_t row_cap = 100;
};

// True when `cell` satisfies `spec`.
bool CellConforms(const ColumnSpec& spec, std::string_view cell);

// Throws kMissingColumn listing every schema column absent from the header,
// or naming any plausibility cap that refers to an unknown column.
ValidationReport Validate(const CsvTable& table, const Schema& schema,
                          const ValidateOptions& options = {});
ValidationReport ValidateFile(const std::string& path, const Schema& schema,
                              const ValidateOptions& options = {});

}  // namespace swfilter::lcpr

#endif  // SWFILTER_LCPR_HPP_
