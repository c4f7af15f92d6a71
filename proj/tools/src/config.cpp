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

#include "config.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "vsl/error.hpp"

namespace vsl::cli {

std::string to_string(Command c) {
  switch (c) {
    case Command::Certify: return "certify";
    case Command::Oracle: return "oracle";
    case Command::Jac: return "jac-2tors";
    case Command::BuildGroup: return "build-group";
  }
  return "unknown";
}

Command parse_command(const std::string& name) {
  for (auto c : {Command::Certify, Command::Oracle, Command::Jac, Command::BuildGroup}) {
    if (to_string(c) == name) return c;
  }
  throw Error(Errc::InvalidInput, "unknown command '" + name + "'");
}

std::vector<std::int64_t> parse_coeff_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && item[used] == ' ') ++used;
    if (used == 0 || used != item.size()) throw Error(Errc::InvalidInput, "bad coefficient '" + item + "'");
  }
  if (out.empty()) throw Error(Errc::InvalidInput, "empty coefficient list");
  return out;
}

void apply_config_json(RunConfig& config, const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::InvalidInput, "config must be a JSON object");
  static const std::set<std::string> known = {"command", "family", "q",          "n",         "p",      "f",
                                              "output",  "cap",    "word_bound", "no_ledger", "threads"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw Error(Errc::InvalidInput, "unknown config key '" + key + "'");
  }
  try {
    if (doc.contains("command")) config.command = parse_command(doc["command"].get<std::string>());
    if (doc.contains("family")) config.family = doc["family"].get<std::string>();
    if (doc.contains("q")) config.q = doc["q"].get<std::uint64_t>();
    if (doc.contains("n")) config.n = doc["n"].get<std::size_t>();
    if (doc.contains("p")) config.p = doc["p"].get<std::uint32_t>();
    if (doc.contains("f")) {
      if (doc["f"].is_string()) {
        config.f = parse_coeff_list(doc["f"].get<std::string>());
      } else {
        config.f = doc["f"].get<std::vector<std::int64_t>>();
      }
    }
    if (doc.contains("output")) config.output = doc["output"].get<std::string>();
    if (doc.contains("cap")) config.cap = doc["cap"].get<std::uint64_t>();
    if (doc.contains("word_bound")) config.word_bound = doc["word_bound"].get<std::size_t>();
    if (doc.contains("no_ledger")) config.use_ledger = !doc["no_ledger"].get<bool>();
    if (doc.contains("threads")) config.threads = doc["threads"].get<unsigned>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("bad config value: ") + e.what());
  }
}

unsigned threads_from_env(unsigned fallback) {
  const char* raw = std::getenv("VSL_THREADS");
  if (!raw || !*raw) return fallback;
  const std::string s(raw);
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v == 0 || v > 1024) throw Error(Errc::InvalidInput, "VSL_THREADS must be in 1..1024");
  return static_cast<unsigned>(v);
}

}  // namespace vsl::cli
