// Copyright 2026 The signedva Authors
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

#ifndef SIGNEDVA_TOOLS_CLI_H_
#define SIGNEDVA_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace signedva::tools {

// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1,  // check rejected, property failure, unbalanced, va > n-max
  kExitUsage = 2,   // parse or usage error
  kExitNotBalanced = 3,
  kExitNotDecomposable = 4,
  kExitOracleCap = 5,
  kExitNotNearTriangulation = 6,
  kExitDomain = 7,  // any other library error
  kExitDefect = 70,
};

// Runs one command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace signedva::tools

#endif  // SIGNEDVA_TOOLS_CLI_H_
