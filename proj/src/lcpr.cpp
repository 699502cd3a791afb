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

#include "swfilter/lcpr.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "swfilter/error.hpp"

namespace swfilter::lcpr {

namespace {

ColumnSpec Categorical(std::string name, std::string desc,
                       std::vector<std::string> cats) {
  ColumnSpec c;
  c.name = std::move(name);
  c.kind = ColumnKind::kCategorical;
  c.description = std::move(desc);
  c.categories = std::move(cats);
  return c;
}

ColumnSpec Range(std::string name, ColumnKind kind, std::string desc,
                 std::string unit, double lo, double hi) {
  ColumnSpec c;
  c.name = std::move(name);
  c.kind = kind;
  c.description = std::move(desc);
  c.unit = std::move(unit);
  c.min = lo;
  c.max = hi;
  return c;
}

ColumnSpec Flag(std::string name, std::string desc) {
  ColumnSpec c;
  c.name = std::move(name);
  c.kind = ColumnKind::kFlag;
  c.description = std::move(desc);
  c.min = 0;
  c.max = 1;
  return c;
}

Schema MakeBuiltin() {
  using K = ColumnKind;
  Schema s;
  s.name = "lcpr";
  s.version = 1;
  auto& c = s.columns;
  c.push_back(Categorical("substation", "Substation identifier", {"A", "B", "C"}));
  {
    ColumnSpec ts;
    ts.name = "timestamp_local";
    ts.kind = K::kTimestamp;
    ts.description = "Timestamp in local time (UTC-5), YYYY-MM-DD hh:mm:ss";
    c.push_back(ts);
  }
  c.push_back(Range("connected_clients", K::kIntegerRange,
                    "Clients connected to the substation during the hour", "", 9, 104));
  c.push_back(Range("connected_smart_tstats", K::kIntegerRange,
                    "Smart thermostats connected during the hour", "", 59, 1278));
  c.push_back(Range("average_inside_temperature", K::kRealRange,
                    "Hourly average indoor temperature", "degC", 16.21, 27.08));
  c.push_back(Range("average_temperature_setpoint", K::kRealRange,
                    "Hourly average thermostat setpoint", "degC", 9.31, 21.03));
  c.push_back(Range("average_outside_temperature", K::kRealRange,
                    "Hourly average outside temperature", "degC", -32.0, 35.2));
  c.push_back(Range("average_solar_radiance", K::kRealRange,
                    "Hourly average solar radiance", "W/m^2", 0, 961));
  c.push_back(Range("average_relative_humidity", K::kRealRange,
                    "Hourly average relative humidity", "%", 0, 100));
  c.push_back(Range("average_snow_precipitation", K::kRealRange,
                    "Hourly average snow precipitation", "mm", 0.0, 306.0));
  c.push_back(Range("average_wind_speed", K::kRealRange,
                    "Hourly average wind speed", "m/s", 0, 15.68));
  {
    ColumnSpec d;
    d.name = "date";
    d.kind = K::kDate;
    d.description = "Date, YYYY-MM-DD";
    d.date_min = "2022-01-01";
    d.date_max = "2024-06-30";
    c.push_back(d);
  }
  c.push_back(Range("month", K::kIntegerRange, "Month", "", 1, 12));
  c.push_back(Range("day", K::kIntegerRange, "Day of the month", "", 1, 31));
  c.push_back(Range("day_of_week", K::kIntegerRange,
                    "Day of the week, Sunday = 1 ... Saturday = 7", "", 1, 7));
  c.push_back(Range("hour", K::kIntegerRange, "Hour of the day", "", 0, 23));
  c.push_back(Categorical("challenge_type", "Type of challenge during the hour",
                          {"None", "CPR", "LCPR"}));
  c.push_back(Flag("challenge_flag", "Hour is in a challenge"));
  c.push_back(Flag("pre_post_challenge_flag", "Hour is pre- or post-challenge"));
  c.push_back(Flag("is_weekend", "Weekend"));
  c.push_back(Flag("is_holiday", "Quebec holiday"));
  c.push_back(Flag("weekend_holiday", "Weekend or holiday"));
  c.push_back(Range("total_energy_consumed", K::kRealRange,
                    "Hourly energy consumption of the substation", "kWh", 7.45,
                    32240.17));
  return s;
}

bool AllDigits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

int ToInt(std::string_view s) {
  int v = 0;
  for (char ch : s) v = v * 10 + (ch - '0');
  return v;
}

bool ValidDate(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  const auto y = s.substr(0, 4), m = s.substr(5, 2), d = s.substr(8, 2);
  if (!AllDigits(y) || !AllDigits(m) || !AllDigits(d)) return false;
  const std::chrono::year_month_day ymd{
      std::chrono::year{ToInt(y)},
      std::chrono::month{static_cast<unsigned>(ToInt(m))},
      std::chrono::day{static_cast<unsigned>(ToInt(d))}};
  return ymd.ok();
}

bool ValidTimestamp(std::string_view s) {
  if (s.size() != 19 || s[10] != ' ' || s[13] != ':' || s[16] != ':') {
    return false;
  }
  if (!ValidDate(s.substr(0, 10))) return false;
  const auto hh = s.substr(11, 2), mm = s.substr(14, 2), ss = s.substr(17, 2);
  if (!AllDigits(hh) || !AllDigits(mm) || !AllDigits(ss)) return false;
  return ToInt(hh) <= 23 && ToInt(mm) <= 59 && ToInt(ss) <= 59;
}

bool ValidInteger(std::string_view s, double lo, double hi) {
  std::string_view digits = s;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!AllDigits(digits) || digits.size() > 12) return false;
  const auto v = ParseNumber(s);
  return v && *v >= lo && *v <= hi;
}

}  // namespace

std::string_view ColumnKindName(ColumnKind kind) {
  switch (kind) {
    case ColumnKind::kCategorical: return "categorical";
    case ColumnKind::kTimestamp: return "timestamp";
    case ColumnKind::kDate: return "date";
    case ColumnKind::kIntegerRange: return "integer";
    case ColumnKind::kRealRange: return "real";
    case ColumnKind::kFlag: return "flag";
  }
  return "unknown";
}

ColumnKind ParseColumnKind(std::string_view name) {
  for (auto k : {ColumnKind::kCategorical, ColumnKind::kTimestamp,
                 ColumnKind::kDate, ColumnKind::kIntegerRange,
                 ColumnKind::kRealRange, ColumnKind::kFlag}) {
    if (ColumnKindName(k) == name) return k;
  }
  throw Error(ErrorCode::kParse, "unknown column kind '" + std::string(name) + "'");
}

const ColumnSpec* Schema::Find(std::string_view column) const {
  for (const auto& c : columns) {
    if (c.name == column) return &c;
  }
  return nullptr;
}

nlohmann::json Schema::ToJson() const {
  nlohmann::json cols = nlohmann::json::array();
  for (const auto& c : columns) {
    nlohmann::json j;
    j["name"] = c.name;
    j["kind"] = ColumnKindName(c.kind);
    j["description"] = c.description;
    if (!c.unit.empty()) j["unit"] = c.unit;
    switch (c.kind) {
      case ColumnKind::kCategorical: j["categories"] = c.categories; break;
      case ColumnKind::kDate:
        j["min"] = c.date_min;
        j["max"] = c.date_max;
        break;
      case ColumnKind::kIntegerRange:
      case ColumnKind::kRealRange:
        j["min"] = c.min;
        j["max"] = c.max;
        break;
      case ColumnKind::kTimestamp:
      case ColumnKind::kFlag:
        break;
    }
    cols.push_back(std::move(j));
  }
  return {{"schema", name}, {"version", version}, {"columns", std::move(cols)}};
}

Schema Schema::FromJson(const nlohmann::json& j) {
  try {
    Schema s;
    s.name = j.at("schema").get<std::string>();
    s.version = j.at("version").get<int>();
    for (const auto& cj : j.at("columns")) {
      ColumnSpec c;
      c.name = cj.at("name").get<std::string>();
      c.kind = ParseColumnKind(cj.at("kind").get<std::string>());
      c.description = cj.value("description", "");
      c.unit = cj.value("unit", "");
      switch (c.kind) {
        case ColumnKind::kCategorical:
          c.categories = cj.at("categories").get<std::vector<std::string>>();
          break;
        case ColumnKind::kDate:
          c.date_min = cj.at("min").get<std::string>();
          c.date_max = cj.at("max").get<std::string>();
          if (!ValidDate(c.date_min) || !ValidDate(c.date_max)) {
            throw Error(ErrorCode::kParse, "bad date bound for " + c.name);
          }
          break;
        case ColumnKind::kIntegerRange:
        case ColumnKind::kRealRange:
          c.min = cj.at("min").get<double>();
          c.max = cj.at("max").get<double>();
          break;
        case ColumnKind::kFlag:
          c.min = 0;
          c.max = 1;
          break;
        case ColumnKind::kTimestamp:
          break;
      }
      s.columns.push_back(std::move(c));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed schema: ") + e.what());
  }
}

Schema Schema::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open schema '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, "schema '" + path + "' is not JSON: " + e.what());
  }
  return FromJson(j);
}

const Schema& BuiltinSchema() {
  static const Schema schema = MakeBuiltin();
  return schema;
}

bool CellConforms(const ColumnSpec& spec, std::string_view cell) {
  switch (spec.kind) {
    case ColumnKind::kCategorical:
      return std::find(spec.categories.begin(), spec.categories.end(), cell) !=
             spec.categories.end();
    case ColumnKind::kTimestamp:
      return ValidTimestamp(cell);
    case ColumnKind::kDate:
      // ISO dates of equal width order lexicographically.
      return ValidDate(cell) && cell >= spec.date_min && cell <= spec.date_max;
    case ColumnKind::kIntegerRange:
      return ValidInteger(cell, spec.min, spec.max);
    case ColumnKind::kRealRange: {
      const auto v = ParseNumber(cell);
      return v && *v >= spec.min && *v <= spec.max;
    }
    case ColumnKind::kFlag:
      return cell == "0" || cell == "1";
  }
  return false;
}

std::size_t ValidationReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& [name, v] : violations) total += v.count;
  return total;
}

const ColumnViolations* ValidationReport::For(std::string_view column) const {
  for (const auto& [name, v] : violations) {
    if (name == column) return &v;
  }
  return nullptr;
}

nlohmann::json ValidationReport::ToJson() const {
  nlohmann::json cols = nlohmann::json::object();
  for (const auto& [name, v] : violations) {
    cols[name] = {{"violations", v.count}, {"rows", v.rows}};
  }
  nlohmann::json plaus = nlohmann::json::array();
  for (const auto& w : plausibility) {
    plaus.push_back({{"column", w.column},
                     {"cap", w.cap},
                     {"count", w.count},
                     {"rows", w.rows}});
  }
  return {{"schema", schema_name},
          {"schema_version", schema_version},
          {"rows_checked", rows_checked},
          {"row_cap", row_cap},
          {"total_violations", total_violations()},
          {"columns", std::move(cols)},
          {"plausibility_warnings", std::move(plaus)}};
}

ValidationReport Validate(const CsvTable& table, const Schema& schema,
                          const ValidateOptions& options) {
  std::vector<std::size_t> col_index;
  std::string missing;
  for (const auto& c : schema.columns) {
    const auto idx = table.ColumnIndex(c.name);
    if (!idx) {
      missing += (missing.empty() ? "" : ", ") + c.name;
      col_index.push_back(0);
    } else {
      col_index.push_back(*idx);
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kMissingColumn, "missing required columns: " + missing);
  }

  ValidationReport report;
  report.schema_name = schema.name;
  report.schema_version = schema.version;
  report.rows_checked = table.rows.size();
  report.row_cap = options.row_cap;
  for (const auto& c : schema.columns) report.violations.push_back({c.name, {}});

  std::vector<std::pair<std::size_t, PlausibilityWarning>> caps;
  for (const auto& [column, cap] : options.plausibility_caps) {
    const auto idx = table.ColumnIndex(column);
    if (!idx) {
      throw Error(ErrorCode::kMissingColumn,
                  "plausibility cap names unknown column '" + column + "'");
    }
    caps.push_back({*idx, {column, cap, 0, {}}});
  }

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    for (std::size_t k = 0; k < schema.columns.size(); ++k) {
      if (CellConforms(schema.columns[k], row[col_index[k]])) continue;
      auto& v = report.violations[k].second;
      ++v.count;
      if (v.rows.size() < options.row_cap) v.rows.push_back(r);
    }
    for (auto& [idx, w] : caps) {
      const auto v = ParseNumber(row[idx]);
      if (v && *v > w.cap) {
        ++w.count;
        if (w.rows.size() < options.row_cap) w.rows.push_back(r);
      }
    }
  }
  for (auto& [idx, w] : caps) report.plausibility.push_back(std::move(w));
  return report;
}

ValidationReport ValidateFile(const std::string& path, const Schema& schema,
                              const ValidateOptions& options) {
  return Validate(ReadCsvTable(path, /*has_header=*/true), schema, options);
}

}  // namespace swfilter::lcpr
