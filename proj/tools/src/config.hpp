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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vsl::cli {

enum class Command { Certify, Oracle, Jac, BuildGroup };

std::string to_string(Command c);
/// Throws InvalidInput.
Command parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::Certify;
  /// sl2, sz, m11, m11_12, m12, l2_11, sym, alt, cyclic, dihedral.
  std::string family;
  /// Field size for sl2 and sz (a power of 2).
  std::optional<std::uint64_t> q;
  /// Degree for sym, alt, cyclic, dihedral.
  std::optional<std::size_t> n;
  /// Prime for jac-2tors.
  std::optional<std::uint32_t> p;
  /// Coefficients of f, highest degree first.
  std::vector<std::int64_t> f;
  /// Output path for the JSON report; stdout when empty.
  std::string output;
  /// Pair checks in jac-2tors before sampling.
  std::uint64_t cap = std::uint64_t{1} << 16;
  std::size_t word_bound = 12;
  bool use_ledger = true;
  unsigned threads = 1;
};

/// "1,0,-3,2" -> {1, 0, -3, 2}. Throws InvalidInput.
std::vector<std::int64_t> parse_coeff_list(const std::string& text);

/// Applies the keys of a JSON object on top of config. Unknown keys and
/// wrongly typed values throw InvalidInput.
void apply_config_json(RunConfig& config, const nlohmann::json& doc);

/// Worker count from VSL_THREADS, or fallback when unset. Throws
/// InvalidInput for a malformed value.
unsigned threads_from_env(unsigned fallback = 1);

}  // namespace vsl::cli
