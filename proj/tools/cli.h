// Copyright 2026 The pssas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSSAS_TOOLS_CLI_H_
#define PSSAS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace pssas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitError = 2;

// Runs one CLI invocation. `args` excludes the program name. Output that the
// binary would print goes to `out` / `err`, so tests can drive the CLI
// in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pssas::cli

#endif  // PSSAS_TOOLS_CLI_H_
