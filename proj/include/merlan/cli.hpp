// Copyright 2026 The MERLAN Tools Authors
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

#ifndef MERLAN_CLI_HPP
#define MERLAN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace merlan::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kSemanticError = 1,   // validation errors, unknown requirement, codegen failure
  kInputError = 2,      // parse, IO, snapshot schema, usage
  kUnsatisfied = 3,     // eval --fail-unsatisfied
  kFormatDiff = 4,      // fmt --check
};

// Runs `merlan <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Line diff in the usual -/+ notation; empty when the texts are equal.
std::string line_diff(const std::string& before, const std::string& after, const std::string& label);

}  // namespace merlan::cli

#endif  // MERLAN_CLI_HPP
