// Copyright 2026 The Pacing Authors
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

// The `pacing` command-line front end. RunCli is the whole program minus
// process setup, so tests can drive it in-process.
//
// Exit codes: 0 success or valid, 1 well-formed input that failed a check,
// 2 usage, parse or limit errors.

#ifndef PACING_TOOLS_CLI_H_
#define PACING_TOOLS_CLI_H_

#include <iosfwd>

namespace pacing::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace pacing::cli

#endif  // PACING_TOOLS_CLI_H_
