// Copyright 2026 The bell_lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BELL_LAB_TOOLS_CLI_H
#define BELL_LAB_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace bell_lab::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitCap = 3;

/// Runs the command line `args` (program name excluded). Results go to `out`;
/// errors go to `err` as one line `ERR:<exit code>:<name>: <message>`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace bell_lab::cli

#endif
