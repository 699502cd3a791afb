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

// Comma-separated input/output. UTF-8, '.' decimal separator, RFC 4180
// style double-quote escaping.

#ifndef SWFILTER_CSV_HPP_
#define SWFILTER_CSV_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swfilter/dataset.hpp"

namespace swfilter {

// Raw rectangular table of string cells.
struct CsvTable {
  std::vector<std::string> header;  // empty when the file has no header
  std::vector<std::vector<std::string>> rows;

  bool has_header() const noexcept { return !header.empty(); }

  // Index of a header column, if present.
  std::optional<std::size_t> ColumnIndex(std::string_view name) const;
};

// Splits one line into cells. Surrounding whitespace of unquoted cells is
// trimmed.
std::vector<std::string> SplitCsvLine(std::string_view line);

// Throws kIo if the file cannot be opened and kParse when a row's cell count
// differs from the first row's.
CsvTable ReadCsvTable(const std::string& path, bool has_header);
CsvTable ParseCsvTable(std::string_view text, bool has_header);

// Finite doubles only; anything else (including "nan", "inf", "") is
// rejected.
std::optional<double> ParseNumber(std::string_view cell);

// Shortest representation that parses back to the same double.
std::string FormatNumber(double v);

struct CsvReadOptions {
  bool has_header = true;
  // Column holding 0/1 labels (1 = outlier). Requires a header.
  std::optional<std::string> label_column;
  // Restrict features to these columns (header names). Default: every
  // non-label column.
  std::optional<std::vector<std::string>> feature_columns;
};

struct CsvReadResult {
  Dataset dataset;
  std::size_t dropped_rows = 0;
  // 0-based data-row indices (header excluded) that were dropped.
  std::vector<std::size_t> dropped_row_indices;
};

// Rows with a missing or unparseable cell are dropped and counted.
// Errors: kIo, kParse (non-rectangular, zero usable rows),
// kMissingColumn (unknown label/feature column).
CsvReadResult ReadCsv(const std::string& path, const CsvReadOptions& options);
CsvReadResult ParseCsv(std::string_view text, const CsvReadOptions& options,
                       std::string provenance = {});

// Header row of feature names, plus `label_column` when labels exist.
std::string FormatCsv(const Dataset& data,
                      std::string_view label_column = "label");

// Writes to a sibling temporary file, then renames over `path`, so readers
// never observe a partial file.
void WriteFileAtomic(const std::string& path, std::string_view contents);

}  // namespace swfilter

#endif  // SWFILTER_CSV_HPP_
