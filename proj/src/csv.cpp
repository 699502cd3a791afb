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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <system_error>

#include "swfilter/error.hpp"

namespace swfilter {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool NeedsQuoting(std::string_view s) {
  return s.find_first_of(",\"\n\r") != std::string_view::npos;
}

void AppendCell(std::string& out, std::string_view cell) {
  if (!NeedsQuoting(cell)) {
    out.append(cell);
    return;
  }
  out.push_back('"');
  for (char c : cell) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
}

}  // namespace

std::optional<std::size_t> CsvTable::ColumnIndex(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> cells;
  std::string cur;
  bool in_quotes = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
      was_quoted = true;
    } else if (c == ',') {
      cells.push_back(was_quoted ? cur : std::string(Trim(cur)));
      cur.clear();
      was_quoted = false;
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(was_quoted ? cur : std::string(Trim(cur)));
  return cells;
}

CsvTable ParseCsvTable(std::string_view text, bool has_header) {
  CsvTable table;
  std::size_t expected = 0;
  bool first = true;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  // Strip a UTF-8 byte order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    auto cells = SplitCsvLine(line);
    if (first) {
      expected = cells.size();
      first = false;
      if (has_header) {
        table.header = std::move(cells);
        continue;
      }
    } else if (cells.size() != expected) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + " has " +
                      std::to_string(cells.size()) + " fields, expected " +
                      std::to_string(expected));
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

CsvTable ReadCsvTable(const std::string& path, bool has_header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseCsvTable(buf.str(), has_header);
}

std::optional<double> ParseNumber(std::string_view cell) {
  cell = Trim(cell);
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::string FormatNumber(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

CsvReadResult ParseCsv(std::string_view text, const CsvReadOptions& options,
                       std::string provenance) {
  if (options.label_column && !options.has_header) {
    throw Error(ErrorCode::kInvalidArgument,
                "a label column can only be named when the file has a header");
  }
  CsvTable table = ParseCsvTable(text, options.has_header);
  const std::size_t width =
      table.has_header() ? table.header.size()
                         : (table.rows.empty() ? 0 : table.rows.front().size());

  std::optional<std::size_t> label_idx;
  if (options.label_column) {
    label_idx = table.ColumnIndex(*options.label_column);
    if (!label_idx) {
      throw Error(ErrorCode::kMissingColumn,
                  "label column '" + *options.label_column + "' not found");
    }
  }

  std::vector<std::size_t> feature_idx;
  if (options.feature_columns) {
    for (const auto& name : *options.feature_columns) {
      auto idx = table.ColumnIndex(name);
      if (!idx) {
        throw Error(ErrorCode::kMissingColumn,
                    "feature column '" + name + "' not found");
      }
      feature_idx.push_back(*idx);
    }
  } else {
    for (std::size_t c = 0; c < width; ++c) {
      if (c != label_idx) feature_idx.push_back(c);
    }
  }
  if (feature_idx.empty()) {
    throw Error(ErrorCode::kParse, "no feature columns");
  }

  CsvReadResult result;
  Dataset& ds = result.dataset;
  ds.provenance = std::move(provenance);
  if (table.has_header()) {
    for (std::size_t c : feature_idx) ds.feature_names.push_back(table.header[c]);
  } else {
    ds.feature_names = DefaultFeatureNames(feature_idx.size());
  }
  ds.values = Matrix(0, feature_idx.size());
  std::vector<bool> labels;
  std::vector<double> row(feature_idx.size());

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cells = table.rows[r];
    bool ok = true;
    for (std::size_t k = 0; k < feature_idx.size() && ok; ++k) {
      auto v = ParseNumber(cells[feature_idx[k]]);
      if (v) row[k] = *v; else ok = false;
    }
    bool label = false;
    if (ok && label_idx) {
      auto v = ParseNumber(cells[*label_idx]);
      if (v && (*v == 0.0 || *v == 1.0)) label = *v == 1.0; else ok = false;
    }
    if (!ok) {
      ++result.dropped_rows;
      result.dropped_row_indices.push_back(r);
      continue;
    }
    ds.values.AppendRow(row);
    labels.push_back(label);
  }
  if (ds.values.rows() == 0) {
    throw Error(ErrorCode::kParse, "no usable rows");
  }
  if (label_idx) ds.truth_labels = std::move(labels);
  return result;
}

CsvReadResult ReadCsv(const std::string& path, const CsvReadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseCsv(buf.str(), options, path);
}

std::string FormatCsv(const Dataset& data, std::string_view label_column) {
  std::string out;
  std::vector<std::string> names = data.feature_names.size() == data.dim()
                                       ? data.feature_names
                                       : DefaultFeatureNames(data.dim());
  for (std::size_t c = 0; c < names.size(); ++c) {
    if (c) out.push_back(',');
    AppendCell(out, names[c]);
  }
  if (data.truth_labels) {
    out.push_back(',');
    AppendCell(out, label_column);
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < data.size(); ++i) {
    auto r = data.values.row(i);
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) out.push_back(',');
      out += FormatNumber(r[c]);
    }
    if (data.truth_labels) {
      out += (*data.truth_labels)[i] ? ",1" : ",0";
    }
    out.push_back('\n');
  }
  return out;
}

void WriteFileAtomic(const std::string& path, std::string_view contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      throw Error(ErrorCode::kIo, "write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::kIo,
                "cannot move output into place at '" + path + "': " +
                    ec.message());
  }
}

}  // namespace swfilter
