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

#include "swfilter/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "parallel.hpp"
#include "swfilter/error.hpp"
#include "swfilter/random.hpp"

namespace swfilter::filter {

namespace {

[[noreturn]] void Invalid(const std::string& msg) {
  throw Error(ErrorCode::kInvalidArgument, msg);
}

std::size_t ResolveVotes(const FilterConfig& cfg, std::size_t population) {
  const std::size_t n =
      cfg.votes.value_or(std::min<std::size_t>(30, population - 1));
  if (n > population - 1) {
    Invalid("n = " + std::to_string(n) + " votes exceed N - 1 = " +
            std::to_string(population - 1) + " available comparators");
  }
  return n;
}

// Votes for the candidates `members` (positions into a population of
// members.size() samples), writing into the global score slots.
template <class PairStat>
void CastVotes(std::span<const std::size_t> members, std::size_t votes,
               std::uint64_t seed, double threshold, std::size_t workers,
               const PairStat& stat, std::vector<double>& scores) {
  const std::size_t m = members.size();
  internal::ParallelFor(m, workers, [&](std::size_t a) {
    const auto comps = DrawComparators(m, a, votes, seed, members[a]);
    std::size_t positive = 0;
    for (std::size_t b : comps) {
      if (stat(a, b) >= threshold) ++positive;
    }
    scores[members[a]] =
        static_cast<double>(positive) / static_cast<double>(votes);
  });
}

FilterReport BuildReport(std::vector<double> scores, const FilterConfig& cfg,
                         std::size_t votes) {
  FilterReport report;
  report.scores = std::move(scores);
  report.flags.resize(report.scores.size());
  for (std::size_t i = 0; i < report.scores.size(); ++i) {
    report.flags[i] = report.scores[i] >= cfg.p;
    if (report.flags[i]) report.outlier_indices.push_back(i);
  }
  report.config = cfg;
  report.config.votes = votes;
  report.votes_cast.assign(report.scores.size(), votes);
  return report;
}

void CheckData(const Dataset& data, std::size_t min_size, const char* algo) {
  data.Validate();
  if (data.size() < min_size) {
    Invalid(std::string(algo) + " needs N >= " + std::to_string(min_size) +
            " samples, got " + std::to_string(data.size()));
  }
}

std::vector<std::size_t> Iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::string_view ThresholdModeName(ThresholdMode mode) {
  return mode == ThresholdMode::kRaw ? "raw" : "normalized";
}

ThresholdMode ParseThresholdMode(std::string_view name) {
  if (name == "raw") return ThresholdMode::kRaw;
  if (name == "normalized") return ThresholdMode::kNormalized;
  Invalid("unknown threshold mode '" + std::string(name) + "'");
}

void FilterConfig::Validate() const {
  if (!(t >= 1.0) || !std::isfinite(t)) Invalid("t must be finite and >= 1");
  if (projections == 0) Invalid("L must be >= 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    Invalid("epsilon must be finite and > 0");
  }
  if (!(eta >= 0.0) || !std::isfinite(eta)) Invalid("eta must be finite and >= 0");
  if (!(p >= 0.0 && p <= 1.0)) Invalid("p must lie in [0, 1]");
  if (votes && *votes == 0) Invalid("n must be >= 1");
  if (chunk_size && *chunk_size < 4) Invalid("chunk size must be >= 4");
}

nlohmann::json FilterConfig::ToJson() const {
  nlohmann::json j;
  j["t"] = t;
  j["L"] = projections;
  j["epsilon"] = epsilon;
  j["eta"] = eta;
  j["p"] = p;
  j["n"] = votes ? nlohmann::json(*votes) : nlohmann::json(nullptr);
  j["seed"] = seed;
  j["chunk_size"] =
      chunk_size ? nlohmann::json(*chunk_size) : nlohmann::json("none");
  j["threshold_mode"] = ThresholdModeName(threshold_mode);
  j["workers"] = workers;
  return j;
}

std::vector<std::size_t> DrawComparators(std::size_t population,
                                         std::size_t candidate,
                                         std::size_t count, std::uint64_t seed,
                                         std::uint64_t key) {
  if (population < 2 || candidate >= population) {
    Invalid("invalid comparator population");
  }
  const std::size_t pool = population - 1;
  if (count > pool) Invalid("more comparators requested than available");
  std::vector<std::size_t> picked;
  picked.reserve(count);
  if (count == pool) {
    picked = Iota(pool);
  } else {
    // Floyd's sampling: count distinct values in [0, pool).
    Rng rng = MakeRng(seed, Stream::kComparators, key);
    std::vector<bool> taken(pool, false);
    for (std::size_t j = pool - count; j < pool; ++j) {
      std::uniform_int_distribution<std::size_t> pick(0, j);
      std::size_t v = pick(rng);
      if (taken[v]) v = j;
      taken[v] = true;
      picked.push_back(v);
    }
    std::sort(picked.begin(), picked.end());
  }
  // Skip over the candidate itself.
  for (std::size_t& v : picked) {
    if (v >= candidate) ++v;
  }
  return picked;
}

LeaveOneOutProjections::LeaveOneOutProjections(const Matrix& points,
                                               const sw::DirectionSet& dirs,
                                               sw::OTOrder t)
    : n_(points.rows()), num_dirs_(dirs.size()), t_(t) {
  if (points.cols() != dirs.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "data dimension " + std::to_string(points.cols()) +
                    " does not match directions of dimension " +
                    std::to_string(dirs.dim()));
  }
  if (n_ < 2) Invalid("leave-one-out distributions need N >= 2");
  sorted_.resize(num_dirs_ * n_);
  rank_.resize(num_dirs_ * n_);
  const bool linear = t_.value() == 1.0;
  if (!linear) gap_cost_.resize(num_dirs_ * (n_ - 1));

  std::vector<std::size_t> order(n_);
  for (std::size_t l = 0; l < num_dirs_; ++l) {
    const std::vector<double> proj = sw::Project(points, dirs.direction(l));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });
    double* s = sorted_.data() + l * n_;
    std::uint32_t* r = rank_.data() + l * n_;
    for (std::size_t k = 0; k < n_; ++k) {
      s[k] = proj[order[k]];
      r[order[k]] = static_cast<std::uint32_t>(k);
    }
    if (!linear) {
      double* g = gap_cost_.data() + l * (n_ - 1);
      for (std::size_t k = 0; k + 1 < n_; ++k) g[k] = t_.Cost(s[k + 1] - s[k]);
    }
  }
}

double LeaveOneOutProjections::Distance(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) Invalid("sample index out of range");
  const double atoms = static_cast<double>(n_ - 1);
  const bool linear = t_.value() == 1.0;
  double total = 0.0;
  for (std::size_t l = 0; l < num_dirs_; ++l) {
    std::size_t ra = rank_[l * n_ + a];
    std::size_t rb = rank_[l * n_ + b];
    if (ra > rb) std::swap(ra, rb);
    double cost = 0.0;
    if (linear) {
      const double* s = sorted_.data() + l * n_;
      cost = s[rb] - s[ra];
    } else {
      const double* g = gap_cost_.data() + l * (n_ - 1);
      for (std::size_t k = ra; k < rb; ++k) cost += g[k];
    }
    total += cost / atoms;
  }
  return t_.Root(total / static_cast<double>(num_dirs_));
}

sw::DirectionSet RunDirections(const FilterConfig& cfg, std::size_t dim) {
  return sw::DirectionSet::Sample(dim, cfg.projections, cfg.seed);
}

double PairStatisticSwad(const Dataset& data, std::size_t i, std::size_t j,
                         sw::OTOrder t, const sw::DirectionSet& dirs) {
  if (i == j) Invalid("pair statistic needs two distinct samples");
  CheckData(data, 3, "pair statistic");
  if (i >= data.size() || j >= data.size()) Invalid("sample index out of range");
  return LeaveOneOutProjections(data.values, dirs, t).Distance(i, j);
}

FilterReport Swad(const Dataset& data, const FilterConfig& cfg) {
  cfg.Validate();
  CheckData(data, 3, "swad");
  const std::size_t n = data.size();
  const std::size_t votes = ResolveVotes(cfg, n);
  const sw::OTOrder t(cfg.t);
  const auto dirs = RunDirections(cfg, data.dim());
  const LeaveOneOutProjections loo(data.values, dirs, t);
  const double threshold = cfg.threshold_mode == ThresholdMode::kRaw
                               ? cfg.epsilon
                               : cfg.epsilon / static_cast<double>(n - 1);
  std::vector<double> scores(n);
  const auto members = Iota(n);
  CastVotes(members, votes, cfg.seed, threshold, cfg.workers,
            [&](std::size_t a, std::size_t b) { return loo.Distance(a, b); },
            scores);
  return BuildReport(std::move(scores), cfg, votes);
}

FilterReport Fead(const Dataset& data, const FilterConfig& cfg) {
  cfg.Validate();
  CheckData(data, 2, "fead");
  const std::size_t n = data.size();
  const std::size_t votes = ResolveVotes(cfg, n);
  std::vector<double> scores(n);
  const auto members = Iota(n);
  CastVotes(members, votes, cfg.seed, cfg.eta, cfg.workers,
            [&](std::size_t a, std::size_t b) {
              return EuclideanDistance(data.values.row(a), data.values.row(b));
            },
            scores);
  return BuildReport(std::move(scores), cfg, votes);
}

std::vector<std::vector<std::size_t>> PartitionChunks(std::size_t n,
                                                      std::size_t chunk_size,
                                                      std::size_t min_chunk,
                                                      std::uint64_t seed) {
  if (chunk_size == 0 || chunk_size > n) Invalid("chunk size must be in [1, N]");
  std::vector<std::size_t> order = Iota(n);
  Rng rng = MakeRng(seed, Stream::kChunkShuffle);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<std::size_t>> chunks;
  for (std::size_t start = 0; start < n; start += chunk_size) {
    const std::size_t end = std::min(n, start + chunk_size);
    std::vector<std::size_t> chunk(order.begin() + static_cast<std::ptrdiff_t>(start),
                                   order.begin() + static_cast<std::ptrdiff_t>(end));
    if (chunk.size() < min_chunk && !chunks.empty()) {
      chunks.back().insert(chunks.back().end(), chunk.begin(), chunk.end());
    } else {
      chunks.push_back(std::move(chunk));
    }
  }
  for (auto& c : chunks) std::sort(c.begin(), c.end());
  return chunks;
}

FilterReport ChunkedSwad(const Dataset& data, const FilterConfig& cfg) {
  cfg.Validate();
  if (!cfg.chunk_size) Invalid("chunked swad requires a chunk size");
  CheckData(data, 3, "chunked swad");
  const std::size_t n = data.size();
  const std::size_t chunk = *cfg.chunk_size;
  if (chunk > n) {
    Invalid("chunk size " + std::to_string(chunk) + " exceeds N = " +
            std::to_string(n));
  }
  const std::size_t votes = cfg.votes.value_or(std::min<std::size_t>(30, chunk - 1));
  if (chunk < std::max<std::size_t>(4, votes + 1)) {
    Invalid("chunk size " + std::to_string(chunk) + " must be >= max(4, n + 1) = " +
            std::to_string(std::max<std::size_t>(4, votes + 1)));
  }

  FilterConfig resolved = cfg;
  resolved.threshold_mode = ThresholdMode::kNormalized;

  const sw::OTOrder t(cfg.t);
  const auto dirs = RunDirections(cfg, data.dim());
  std::vector<double> scores(n);
  for (const auto& members : PartitionChunks(n, chunk, votes + 1, cfg.seed)) {
    const Matrix sub = data.values.SelectRows(members);
    const LeaveOneOutProjections loo(sub, dirs, t);
    const double threshold =
        cfg.epsilon / static_cast<double>(members.size() - 1);
    CastVotes(members, votes, cfg.seed, threshold, cfg.workers,
              [&](std::size_t a, std::size_t b) { return loo.Distance(a, b); },
              scores);
  }
  return BuildReport(std::move(scores), resolved, votes);
}

}  // namespace swfilter::filter
