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

#ifndef SWFILTER_STATS_HPP_
#define SWFILTER_STATS_HPP_

#include <span>
#include <utility>
#include <vector>

namespace swfilter {

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> AverageRanks(std::span<const double> values);

// Pearson correlation of the average-rank vectors. Throws kInvalidArgument
// when N < 2 or either side is constant, kSizeMismatch on unequal lengths.
double Spearman(std::span<const double> x, std::span<const double> y);

// (sin(2 pi v / period), cos(2 pi v / period)) per value; period >= 1.
std::vector<std::pair<double, double>> CyclicalEncode(
    std::span<const long long> values, long long period);

}  // namespace swfilter

#endif  // SWFILTER_STATS_HPP_
