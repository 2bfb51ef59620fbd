// Copyright 2026 The dualmod Authors.
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

#ifndef DUALMOD_CLI_H_
#define DUALMOD_CLI_H_

#include <ostream>

namespace dualmod {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;      // I/O, schema or usage errors
inline constexpr int kExitStructure = 2;  // instance is not dual-modular
inline constexpr int kExitDomain = 3;     // e.g. zero cost coordinate

// Runs one subcommand (verify, decompose, solve, contracts, complement,
// divergence). JSON goes to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace dualmod

#endif  // DUALMOD_CLI_H_
