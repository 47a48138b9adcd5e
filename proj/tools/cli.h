// Copyright 2026 The Hushwave Authors. All Rights Reserved.
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

// Subcommand dispatch for the hushwave tool.
//
// Exit status: 0 success, 1 invalid arguments or configuration, 2 runtime
// failure (I/O, unexpected state).

#ifndef HUSHWAVE_TOOLS_CLI_H_
#define HUSHWAVE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "hushwave/run_config.h"

namespace hushwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitRuntime = 2;

// args excludes the program name.
int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const EnvLookup& env = ProcessEnv());

std::vector<std::string> SubcommandNames();

}  // namespace hushwave::cli

#endif  // HUSHWAVE_TOOLS_CLI_H_
