// Copyright 2026 The vsimple Authors
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

#include <string>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "vsl/groups.hpp"

namespace vsl::cli {

struct CommandResult {
  /// certify: 0 very simple (possibly modulo ledger), 2 otherwise.
  /// oracle: 0 very simple, 2 not. jac-2tors: 0 all checks pass, 2 a check
  /// failed. Any command: 1 on bad input or construction failure.
  int exit_code = 0;
  nlohmann::json report;
  /// One-line human summary.
  std::string summary;
};

/// Throws InvalidInput for missing or inconsistent group parameters.
groups::BuiltGroup build_group(const RunConfig& config);

/// Runs the command; library errors become exit code 1 with an "error"
/// object in the report.
CommandResult run(const RunConfig& config);

}  // namespace vsl::cli
