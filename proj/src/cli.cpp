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

#include "swfilter/cli.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "parallel.hpp"
#include "swfilter/csv.hpp"
#include "swfilter/dataset.hpp"
#include "swfilter/error.hpp"
#include "swfilter/eval.hpp"
#include "swfilter/filter.hpp"
#include "swfilter/generators.hpp"
#include "swfilter/lcpr.hpp"

namespace swfilter::cli {

namespace {

using nlohmann::json;

// Raised for problems with flag values detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path;
  bool no_header = false;
  std::string label_column;
  std::vector<std::string> columns;
  bool standardize = false;

  void Register(CLI::App* app, bool require_header) {
    app->add_option("-i,--input", path, "Input CSV file")->required();
    if (!require_header) {
      app->add_flag("--no-header", no_header, "Input has no header row");
    }
    app->add_option("--columns", columns,
                    "Feature columns to use (default: all non-label columns)")
        ->delimiter(',');
    app->add_flag("--standardize", standardize,
                  "Scale features to zero mean, unit variance before running");
  }
};

struct LoadedData {
  Dataset data;
  std::size_t dropped = 0;
  std::vector<std::size_t> row_ids;  // original data-row index per sample
  json standardization = nullptr;
  std::vector<std::string> warnings;
};

LoadedData Load(const InputOptions& in) {
  CsvReadOptions opts;
  opts.has_header = !in.no_header;
  if (!in.label_column.empty()) opts.label_column = in.label_column;
  if (!in.columns.empty()) opts.feature_columns = in.columns;
  CsvReadResult read = ReadCsv(in.path, opts);
  LoadedData out;
  out.dropped = read.dropped_rows;
  std::size_t next_drop = 0;
  for (std::size_t r = 0; out.row_ids.size() < read.dataset.size(); ++r) {
    if (next_drop < read.dropped_row_indices.size() &&
        read.dropped_row_indices[next_drop] == r) {
      ++next_drop;
      continue;
    }
    out.row_ids.push_back(r);
  }
  if (read.dropped_rows > 0) {
    out.warnings.push_back("dropped " + std::to_string(read.dropped_rows) +
                           " row(s) with missing or unparseable cells");
  }
  out.data = std::move(read.dataset);
  if (in.standardize) {
    StandardizeResult s = Standardize(out.data);
    json stats = json::array();
    for (std::size_t c = 0; c < s.stats.size(); ++c) {
      stats.push_back({{"column", s.data.feature_names[c]},
                       {"mean", s.stats[c].mean},
                       {"std", s.stats[c].stddev}});
    }
    out.standardization = std::move(stats);
    for (auto& w : s.warnings) out.warnings.push_back(std::move(w));
    out.data = std::move(s.data);
  }
  return out;
}

json InputJson(const InputOptions& in, const LoadedData& d) {
  return {{"path", in.path},
          {"header", !in.no_header},
          {"label_column", in.label_column.empty() ? json(nullptr) : json(in.label_column)},
          {"columns", d.data.feature_names},
          {"rows", d.data.size()},
          {"dropped_rows", d.dropped},
          {"standardize", in.standardize},
          {"standardization", d.standardization}};
}

// Outputs are staged and only written once a command has fully succeeded,
// each through an atomic rename.
class Outputs {
 public:
  void Stage(std::string path, std::string contents) {
    files_.emplace_back(std::move(path), std::move(contents));
  }
  void Commit() {
    for (const auto& [path, contents] : files_) WriteFileAtomic(path, contents);
  }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

// ---- filter ---------------------------------------------------------------

struct FilterCommand {
  InputOptions input;
  std::string output;
  std::string summary;
  std::string algo = "swad";
  filter::FilterConfig cfg;
  std::optional<std::size_t> votes;
  std::optional<std::size_t> chunk_size;
  std::string threshold_mode;
  std::size_t threads = 0;

  void Register(CLI::App* app) {
    input.Register(app, false);
    app->add_option("--label-column", input.label_column,
                    "0/1 ground-truth column excluded from features; enables metrics");
    app->add_option("-o,--output", output, "Per-row result CSV")->required();
    app->add_option("--summary", summary, "JSON run summary (default: <output>.json)");
    app->add_option("--algo", algo, "swad | fead | swad-chunked")
        ->check(CLI::IsMember({"swad", "fead", "swad-chunked"}));
    app->add_option("--epsilon", cfg.epsilon, "SW vote threshold");
    app->add_option("--eta", cfg.eta, "Euclidean vote threshold (fead)");
    app->add_option("--p", cfg.p, "Fraction of positive votes needed to flag");
    app->add_option("--n", votes, "Votes per candidate (default min(30, N-1))");
    app->add_option("--L", cfg.projections, "Number of projection directions");
    app->add_option("--t", cfg.t, "Wasserstein order");
    app->add_option("--seed", cfg.seed, "Random seed");
    app->add_option("--chunk-size", chunk_size, "Chunk size (swad-chunked)");
    app->add_option("--threshold-mode", threshold_mode, "raw | normalized")
        ->check(CLI::IsMember({"raw", "normalized"}));
    app->add_option("--threads", threads, "Worker threads (0 = all cores)");
  }

  int Run(std::ostream& out) {
    cfg.votes = votes;
    cfg.chunk_size = chunk_size;
    cfg.workers = internal::ResolveWorkers(threads);
    if (algo == "swad-chunked") {
      if (!chunk_size) throw UsageError("--algo swad-chunked requires --chunk-size");
      if (threshold_mode == "raw") {
        throw UsageError("swad-chunked always uses normalized thresholds");
      }
      cfg.threshold_mode = filter::ThresholdMode::kNormalized;
    } else {
      if (chunk_size) throw UsageError("--chunk-size only applies to swad-chunked");
      if (!threshold_mode.empty()) {
        cfg.threshold_mode = filter::ParseThresholdMode(threshold_mode);
      }
    }
    try {
      cfg.Validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (summary.empty()) summary = output + ".json";

    const auto start = std::chrono::steady_clock::now();
    LoadedData d = Load(input);
    filter::FilterReport rep;
    if (algo == "fead") {
      rep = filter::Fead(d.data, cfg);
    } else if (algo == "swad") {
      rep = filter::Swad(d.data, cfg);
    } else {
      rep = filter::ChunkedSwad(d.data, cfg);
    }
    const double wall = Seconds(start);

    std::string csv = "row_index,score,is_outlier\n";
    for (std::size_t i = 0; i < rep.scores.size(); ++i) {
      csv += std::to_string(d.row_ids[i]) + "," + FormatNumber(rep.scores[i]) +
             (rep.flags[i] ? ",1\n" : ",0\n");
    }
    json s;
    s["command"] = "filter";
    s["algo"] = algo;
    s["input"] = InputJson(input, d);
    s["config"] = rep.config.ToJson();
    s["counts"] = {{"rows", rep.scores.size()}, {"outliers", rep.outlier_count()}};
    if (d.data.truth_labels) {
      const auto c = eval::Confusion(rep.flags, *d.data.truth_labels);
      eval::EvalResult r{c, 0.0, std::nullopt, {}};
      const auto m = eval::ComputeMetrics(c);
      r.accuracy = m.accuracy;
      r.precision = m.precision;
      s["metrics"] = eval::ResultJson(r);
    }
    s["warnings"] = d.warnings;
    s["outputs"] = {{"rows", output}, {"summary", summary}};
    s["wall_time_seconds"] = wall;

    Outputs files;
    files.Stage(output, csv);
    files.Stage(summary, s.dump(2) + "\n");
    files.Commit();
    out << rep.outlier_count() << " of " << rep.scores.size()
        << " rows flagged as outliers\n";
    return kExitOk;
  }
};

// ---- eval -----------------------------------------------------------------

struct EvalCommand {
  InputOptions input;
  std::string grid_path;
  std::string output;
  std::string summary;
  std::uint64_t seed = 0;
  std::size_t threads = 0;

  void Register(CLI::App* app) {
    input.label_column = "label";
    input.Register(app, true);
    app->add_option("--label-column", input.label_column, "0/1 ground-truth column")
        ->capture_default_str();
    app->add_option("-g,--grid", grid_path, "Grid-spec JSON file")->required();
    app->add_option("-o,--output", output, "Grid results CSV")->required();
    app->add_option("--summary", summary, "Best-run JSON summary (default: <output>.json)");
    app->add_option("--seed", seed, "Random seed");
    app->add_option("--threads", threads, "Worker threads (0 = all cores)");
  }

  int Run(std::ostream& out) {
    eval::GridSpec grid;
    try {
      grid = eval::GridSpec::Load(grid_path);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (summary.empty()) summary = output + ".json";
    const auto start = std::chrono::steady_clock::now();
    LoadedData d = Load(input);
    const std::size_t workers = internal::ResolveWorkers(threads);
    filter::FilterConfig base;
    base.seed = seed;
    const auto result = eval::GridSearch(d.data, grid, seed, workers, base);

    json s;
    s["command"] = "eval";
    s["input"] = InputJson(input, d);
    s["grid"] = grid.ToJson();
    s["seed"] = seed;
    s["threads"] = workers;
    json defaults = base.ToJson();
    defaults.erase("workers");
    s["defaults"] = std::move(defaults);
    s["evaluated_points"] = result.results.size();
    s["best"] = eval::ResultJson(result.best);
    s["warnings"] = d.warnings;
    s["outputs"] = {{"results", output}, {"summary", summary}};
    s["wall_time_seconds"] = Seconds(start);

    Outputs files;
    files.Stage(output, eval::ResultsCsv(result.results));
    files.Stage(summary, s.dump(2) + "\n");
    files.Commit();
    out << "best accuracy " << FormatNumber(result.best.accuracy) << " over "
        << result.results.size() << " grid points\n";
    return kExitOk;
  }
};

// ---- generate -------------------------------------------------------------

struct GenerateCommand {
  std::string kind;
  std::string output;
  std::string summary;
  std::uint64_t seed = 0;
  std::size_t n = 300;
  double noise = 0.05;
  double outlier_fraction = 0.15;
  std::size_t blob_centers = 3;
  double circle_factor = 0.5;
  std::size_t n_major = 300;
  std::size_t n_minor = 60;
  std::size_t n_outlier = 15;
  std::size_t replicas = 1;

  void Register(CLI::App* app) {
    app->add_option("--kind", kind,
                    "three-gaussians | planted | blobs | moons | circles | "
                    "anisotropic | uniform-noise")
        ->required()
        ->check(CLI::IsMember({"three-gaussians", "planted", "blobs", "moons",
                               "circles", "anisotropic", "uniform-noise"}));
    app->add_option("-o,--output", output, "Dataset CSV")->required();
    app->add_option("--summary", summary, "Also write the JSON echo to this file");
    app->add_option("--seed", seed, "Random seed");
    app->add_option("--n", n, "Inlier count (toy kinds: total inliers; planted: per replica)");
    app->add_option("--noise", noise, "Gaussian noise stddev (toy kinds)");
    app->add_option("--outlier-fraction", outlier_fraction,
                    "Uniform outliers on [-6,6]^2 as a fraction of n (toy kinds)");
    app->add_option("--blob-centers", blob_centers, "Centers for blobs/anisotropic");
    app->add_option("--circle-factor", circle_factor, "Inner/outer radius ratio");
    app->add_option("--n-major", n_major, "Majority group size (three-gaussians)");
    app->add_option("--n-minor", n_minor, "Minority group size (three-gaussians)");
    app->add_option("--n-outlier", n_outlier, "Outlier group size (three-gaussians)");
    app->add_option("--replicas", replicas, "Replicas (planted)");
  }

  int Run(std::ostream& out) {
    json echo;
    echo["command"] = "generate";
    echo["kind"] = kind;
    echo["seed"] = seed;
    Dataset ds;
    if (kind == "three-gaussians") {
      if (n_major + n_minor + n_outlier == 0) {
        throw UsageError("three-gaussians needs at least one sample");
      }
      ds = GenerateThreeGaussians(
          ThreeGaussianParams::Default(n_major, n_minor, n_outlier), seed);
      echo["n_major"] = n_major;
      echo["n_minor"] = n_minor;
      echo["n_outlier"] = n_outlier;
    } else if (kind == "planted") {
      if (n == 0 || replicas == 0) throw UsageError("--n and --replicas must be >= 1");
      ds = GeneratePlantedOutliers(n, replicas, seed);
      echo["n"] = n;
      echo["replicas"] = replicas;
    } else {
      if (n == 0) throw UsageError("--n must be >= 1");
      if (!(noise >= 0.0)) throw UsageError("--noise must be >= 0");
      if (!(outlier_fraction >= 0.0 && outlier_fraction <= 10.0)) {
        throw UsageError("--outlier-fraction must lie in [0, 10]");
      }
      if (blob_centers == 0) throw UsageError("--blob-centers must be >= 1");
      ToyOptions opts;
      opts.n = n;
      opts.noise = noise;
      opts.seed = seed;
      opts.outlier_fraction = outlier_fraction;
      opts.blob_centers = blob_centers;
      opts.circle_factor = circle_factor;
      ds = GenerateToy(ParseToyKind(kind), opts);
      echo["n"] = n;
      echo["noise"] = noise;
      echo["outlier_fraction"] = outlier_fraction;
      echo["blob_centers"] = blob_centers;
      echo["circle_factor"] = circle_factor;
    }
    echo["rows"] = ds.size();
    echo["label_column"] = "label";
    echo["output"] = output;

    Outputs files;
    files.Stage(output, FormatCsv(ds, "label"));
    if (!summary.empty()) files.Stage(summary, echo.dump(2) + "\n");
    files.Commit();
    out << echo.dump() << "\n";
    return kExitOk;
  }
};

// ---- validate-lcpr --------------------------------------------------------

struct ValidateCommand {
  std::string input;
  std::string schema_path;
  std::vector<std::string> caps;
  std::string output;
  std::size_t max_rows = 100;

  void Register(CLI::App* app) {
    app->add_option("-i,--input", input, "LCPR CSV file")->required();
    app->add_option("--schema", schema_path, "Schema JSON (default: built-in v1)");
    app->add_option("--cap", caps, "Plausibility cap COLUMN=VALUE (repeatable)");
    app->add_option("-o,--output", output, "Report JSON (default: stdout)");
    app->add_option("--max-rows-listed", max_rows, "Row indices listed per finding");
  }

  int Run(std::ostream& out) {
    lcpr::ValidateOptions opts;
    opts.row_cap = max_rows;
    for (const auto& c : caps) {
      const auto eq = c.find('=');
      const auto value =
          eq == std::string::npos ? std::nullopt : ParseNumber(c.substr(eq + 1));
      if (eq == 0 || !value) {
        throw UsageError("--cap expects COLUMN=NUMBER, got '" + c + "'");
      }
      opts.plausibility_caps[c.substr(0, eq)] = *value;
    }
    const lcpr::Schema schema =
        schema_path.empty() ? lcpr::BuiltinSchema() : lcpr::Schema::Load(schema_path);
    const auto report = lcpr::ValidateFile(input, schema, opts);
    json j = report.ToJson();
    j["input"] = input;
    const std::string text = j.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      WriteFileAtomic(output, text);
    }
    return report.total_violations() == 0 ? kExitOk : kExitFindings;
  }
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sliced-Wasserstein outlier filtering toolkit"};
  app.require_subcommand(1);
  app.name(args.empty() ? "swfilter" : args.front());

  FilterCommand filter_cmd;
  EvalCommand eval_cmd;
  GenerateCommand generate_cmd;
  ValidateCommand validate_cmd;
  auto* filter_app = app.add_subcommand("filter", "Flag outliers with SWAD or FEAD");
  auto* eval_app = app.add_subcommand("eval", "Grid-search a detector on labelled data");
  auto* generate_app = app.add_subcommand("generate", "Write a synthetic dataset");
  auto* validate_app =
      app.add_subcommand("validate-lcpr", "Check an LCPR file against its schema");
  filter_cmd.Register(filter_app);
  eval_cmd.Register(eval_app);
  generate_cmd.Register(generate_app);
  validate_cmd.Register(validate_app);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*filter_app) return filter_cmd.Run(out);
    if (*eval_app) return eval_cmd.Run(out);
    if (*generate_app) return generate_cmd.Run(out);
    if (*validate_app) return validate_cmd.Run(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace swfilter::cli
