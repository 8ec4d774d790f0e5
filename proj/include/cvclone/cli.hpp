// Copyright 2026 The cvcloner Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cvclone/analysis.hpp"
#include "cvclone/verify.hpp"

namespace cvclone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

/// Entry point of the `cvcloner` tool. `args` excludes the program name.
/// Reports go to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "re,im" or "re".
Complex parse_complex(const std::string& text);

/// JSON document for `clone`; deterministic for identical inputs.
std::string clone_json(const MachineReport& report);
std::string clone_csv(const MachineReport& report);

}  // namespace cvclone::cli
