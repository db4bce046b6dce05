// Copyright 2026 The k3mw Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3mw::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kUsageError = 2 };

/// Runs the k3mw command line (args excludes the program name).  Reports
/// go to out, diagnostics and timing to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding qm_curve.json, split_curve.json and example43.json.
std::string default_data_dir();

}  // namespace k3mw::cli
