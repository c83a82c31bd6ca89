// Copyright 2026 The altsign Authors
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

#ifndef ALTSIGN_CLI_H_
#define ALTSIGN_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace altsign::cli {

// Process exit codes. verify uses kFailure for a labeling that does not
// alternate; the others are shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kBadInput = 2,
  kDisconnected = 3,
  kInternalError = 4,
  kFalsified = 5,
};

// Runs one invocation. `args` excludes the program name. Reads "-" inputs
// from `in`; reports go to `out` unless redirected to files by flags,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace altsign::cli

#endif  // ALTSIGN_CLI_H_
