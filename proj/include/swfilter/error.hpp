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

#ifndef SWFILTER_ERROR_HPP_
#define SWFILTER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace swfilter {

enum class ErrorCode {
  kInvalidArgument,   // bad parameter value (k, n, p, period, ...)
  kDimensionMismatch,
  kSizeMismatch,
  kNonFiniteValue,    // NaN/Inf in a sample matrix
  kIo,
  kParse,             // malformed file contents
  kMissingColumn,
  kMissingLabels,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this type. `code()` lets callers
// (the CLI in particular) map failures onto exit codes without string
// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swfilter

#endif  // SWFILTER_ERROR_HPP_
