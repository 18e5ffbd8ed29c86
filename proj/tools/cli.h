// Copyright 2026 The MetaSRL Toolkit Authors.
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


#ifndef METASRL_TOOLS_CLI_H_
#define METASRL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace metasrl::cli {

enum ExitCode {
  kExitOk = 0,
  kExitViolations = 1,
  kExitInputError = 2,
  kExitUsage = 3,
};

// Runs one invocation; args excludes the program name.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace metasrl::cli

#endif  // METASRL_TOOLS_CLI_H_
