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

// Voting outlier filters over leave-one-out empirical distributions.
//
// For every candidate z_i, n comparators z_j != i are drawn without
// replacement. Each comparator casts a positive vote when the pair statistic
// reaches the threshold:
//
//   SWAD  SW_t(P^{-i}, P^{-j}) >= epsilon
//   FEAD  ||z_i - z_j||_2      >= eta
//
// and z_i is flagged when the fraction of positive votes is >= p.
//
// Each candidate's comparator draws depend only on (seed, sample key), and
// the projection directions are sampled once per run and shared by every
// pair, so results are independent of worker count and scheduling.

#ifndef SWFILTER_FILTER_HPP_
#define SWFILTER_FILTER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "swfilter/dataset.hpp"
#include "swfilter/sw_core.hpp"

namespace swfilter::filter {

enum class ThresholdMode {
  kRaw,         // compare SW against epsilon as given
  kNormalized,  // compare against epsilon / (N_eff - 1)
};

std::string_view ThresholdModeName(ThresholdMode mode);
ThresholdMode ParseThresholdMode(std::string_view name);

struct FilterConfig {
  double t = 1.0;
  std::size_t projections = 50;  // L
  double epsilon = 0.1;
  double eta = 1.0;
  double p = 0.7;
  // Votes per candidate. Unset means min(30, N_eff - 1).
  std::optional<std::size_t> votes;
  std::uint64_t seed = 0;
  std::optional<std::size_t> chunk_size;
  ThresholdMode threshold_mode = ThresholdMode::kRaw;
  // 0 = hardware concurrency. Does not affect results.
  std::size_t workers = 1;

  // Data-independent checks (ranges of t, L, epsilon, eta, p, n, chunk).
  void Validate() const;

  nlohmann::json ToJson() const;
};

struct FilterReport {
  std::vector<bool> flags;
  std::vector<double> scores;  // vote fraction in {0, 1/n, ..., 1}
  std::vector<std::size_t> outlier_indices;
  FilterConfig config;  // echo with every default resolved
  std::vector<std::size_t> votes_cast;

  std::size_t outlier_count() const noexcept { return outlier_indices.size(); }

  friend bool operator==(const FilterReport& a, const FilterReport& b) {
    return a.flags == b.flags && a.scores == b.scores &&
           a.outlier_indices == b.outlier_indices &&
           a.votes_cast == b.votes_cast;
  }
};

// Sorted comparator indices for candidate `candidate` among `population`
// samples: `count` distinct indices != candidate, uniform without
// replacement, determined by (seed, key) alone.
std::vector<std::size_t> DrawComparators(std::size_t population,
                                         std::size_t candidate,
                                         std::size_t count, std::uint64_t seed,
                                         std::uint64_t key);

// Sorted projections of a fixed dataset on a shared direction set, with the
// rank of every sample, so that the sliced distance between two
// leave-one-out distributions costs O(L) for t = 1 and O(L * rank gap)
// otherwise.
//
// Removing atom a or atom b (ranks r_a < r_b) from a sorted sequence s
// leaves sequences that differ only on positions r_a .. r_b - 1, where they
// hold s[k] and s[k + 1]. Hence
//   W_t^t = (1 / (N - 1)) * sum_{k = r_a}^{r_b - 1} |s[k+1] - s[k]|^t,
// which telescopes to |<theta, z_a - z_b>| / (N - 1) for t = 1.
class LeaveOneOutProjections {
 public:
  LeaveOneOutProjections(const Matrix& points, const sw::DirectionSet& dirs,
                         sw::OTOrder t);

  std::size_t size() const noexcept { return n_; }

  // SW_t(P^{-a}, P^{-b}).
  double Distance(std::size_t a, std::size_t b) const;

 private:
  std::size_t n_;
  std::size_t num_dirs_;
  sw::OTOrder t_;
  std::vector<double> sorted_;             // num_dirs_ x n_
  std::vector<std::uint32_t> rank_;        // num_dirs_ x n_
  std::vector<double> gap_cost_;           // num_dirs_ x (n_ - 1), t != 1
};

// SW_t between the two leave-one-out distributions of samples i and j.
double PairStatisticSwad(const Dataset& data, std::size_t i, std::size_t j,
                         sw::OTOrder t, const sw::DirectionSet& dirs);

// Direction set a run with this config uses for d-dimensional data.
sw::DirectionSet RunDirections(const FilterConfig& cfg, std::size_t dim);

// Errors (all swfilter::Error): N < 3 (N < 2 for FEAD) or n > N - 1 ->
// kInvalidArgument; non-finite data -> kNonFiniteValue naming the row.
FilterReport Swad(const Dataset& data, const FilterConfig& cfg);
FilterReport Fead(const Dataset& data, const FilterConfig& cfg);

// Seeded shuffle into chunks of chunk_size (a short tail chunk is merged into
// its predecessor), each filtered independently with normalized thresholds.
// Chunk members are processed in ascending original index and sample keys
// are original indices, so chunk_size = N reproduces Swad in normalized mode.
FilterReport ChunkedSwad(const Dataset& data, const FilterConfig& cfg);

// Chunk membership ChunkedSwad would use; each chunk sorted ascending.
std::vector<std::vector<std::size_t>> PartitionChunks(std::size_t n,
                                                      std::size_t chunk_size,
                                                      std::size_t min_chunk,
                                                      std::uint64_t seed);

}  // namespace swfilter::filter

#endif  // SWFILTER_FILTER_HPP_
