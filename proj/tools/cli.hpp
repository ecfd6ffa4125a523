// Copyright 2026 The quadprod Authors
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

#ifndef QUADPROD_TOOLS_CLI_HPP
#define QUADPROD_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace quadprod::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,      // infeasible, verification failure, oracle mismatch
  kUsage = 2,         // usage or parse error
  kInternal = 3,      // construction self-check failed
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadprod::cli

#endif  // QUADPROD_TOOLS_CLI_HPP
