// Copyright 2026 The cloudmatch Authors
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

#ifndef CLOUDMATCH_CLI_HPP_
#define CLOUDMATCH_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace cloudmatch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name. Exit codes: 0 on
// success, 1 on domain errors (rejected offers, integrity failures,
// infeasible scenarios), 2 on usage errors (bad flags, unreadable files).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_CLI_HPP_
