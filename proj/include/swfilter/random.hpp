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

#ifndef SWFILTER_RANDOM_HPP_
#define SWFILTER_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace swfilter {

using Rng = std::mt19937_64;

// Separate streams keep the direction sampler, comparator draws, chunk
// shuffles and generators statistically independent for a single user seed.
enum class Stream : std::uint64_t {
  kDirections = 1,
  kComparators = 2,
  kChunkShuffle = 3,
  kGenerator = 4,
};

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based seed for (seed, stream, counter). Depends on nothing but its
// arguments, so any worker can reproduce the stream of any sample.
constexpr std::uint64_t DeriveSeed(std::uint64_t seed, Stream stream,
                                   std::uint64_t counter = 0) noexcept {
  return Mix64(Mix64(seed ^ Mix64(static_cast<std::uint64_t>(stream))) +
               counter);
}

inline Rng MakeRng(std::uint64_t seed, Stream stream,
                   std::uint64_t counter = 0) {
  return Rng(DeriveSeed(seed, stream, counter));
}

}  // namespace swfilter

#endif  // SWFILTER_RANDOM_HPP_
