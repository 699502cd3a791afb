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

#ifndef SWFILTER_CLI_HPP_
#define SWFILTER_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace swfilter::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFindings = 3;  // validate-lcpr found violations

// Runs the command line `args`, where args[0] is the program name.
// Subcommands: filter, eval, generate, validate-lcpr.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace swfilter::cli

#endif  // SWFILTER_CLI_HPP_
