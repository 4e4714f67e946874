// Copyright 2026 The fkineq Authors
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


// Command-line front end. The program in tools/ only forwards to run_cli so
// tests can drive every subcommand in-process.

#ifndef FKINEQ_CLI_HPP
#define FKINEQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fkineq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Subcommands check, suite, falsify and demo. Returns 0 on success, 1 when
/// a guaranteed inequality fails (or the counterexample does not violate),
/// 2 on usage, parse or input errors. Records go to --out or `out`; the
/// summary goes to `out` when --out is set and to `err` otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fkineq

#endif  // FKINEQ_CLI_HPP
