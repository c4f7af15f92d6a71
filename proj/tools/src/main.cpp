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

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "vsl/error.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string family;
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::uint32_t p = 0;
  std::string f;
  std::string emit_json;
  std::string report;
  std::uint64_t cap = 0;
  std::size_t word_bound = 0;
  bool no_ledger = false;
};

void add_flags(CLI::App* sub, Flags& fl) {
  sub->add_option("--config", fl.config_path, "JSON run config; flags given here override it");
  sub->add_option("--family", fl.family, "sl2, sz, m11, m11_12, m12, l2_11, sym, alt, cyclic, dihedral");
  sub->add_option("--q", fl.q, "field size for sl2 and sz (power of 2)");
  sub->add_option("--n", fl.n, "degree for sym, alt, cyclic, dihedral");
  sub->add_option("--p", fl.p, "prime for jac-2tors");
  sub->add_option("--f", fl.f, "coefficients of f, highest degree first, comma separated");
  sub->add_option("--emit-json", fl.emit_json, "write the JSON report here instead of stdout");
  sub->add_option("--report", fl.report, "same as --emit-json");
  sub->add_option("--cap", fl.cap, "pair checks before sampling (jac-2tors, default 65536)");
  sub->add_option("--word-bound", fl.word_bound, "trace witness word length bound (default 12)");
  sub->add_flag("--no-ledger", fl.no_ledger, "ignore cited facts");
}

vsl::cli::RunConfig make_config(vsl::cli::Command cmd, const CLI::App* sub, const Flags& fl) {
  vsl::cli::RunConfig c;
  c.threads = vsl::cli::threads_from_env(1);
  if (!fl.config_path.empty()) {
    std::ifstream in(fl.config_path);
    if (!in) throw vsl::Error(vsl::Errc::InvalidInput, "cannot read " + fl.config_path);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw vsl::Error(vsl::Errc::InvalidInput, std::string("config does not parse: ") + e.what());
    }
    vsl::cli::apply_config_json(c, doc);
  }
  c.command = cmd;
  if (sub->count("--family")) c.family = fl.family;
  if (sub->count("--q")) c.q = fl.q;
  if (sub->count("--n")) c.n = fl.n;
  if (sub->count("--p")) c.p = fl.p;
  if (sub->count("--f")) c.f = vsl::cli::parse_coeff_list(fl.f);
  if (sub->count("--emit-json")) c.output = fl.emit_json;
  if (sub->count("--report")) c.output = fl.report;
  if (sub->count("--cap")) c.cap = fl.cap;
  if (sub->count("--word-bound")) c.word_bound = fl.word_bound;
  if (fl.no_ledger) c.use_ledger = false;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vsl: very simple module certificates and hyperelliptic 2-torsion checks"};
  app.require_subcommand(1);
  Flags fl;
  std::vector<std::pair<CLI::App*, vsl::cli::Command>> subs;
  for (auto cmd : {vsl::cli::Command::Certify, vsl::cli::Command::Oracle, vsl::cli::Command::Jac,
                   vsl::cli::Command::BuildGroup}) {
    const char* help = "";
    switch (cmd) {
      case vsl::cli::Command::Certify: help = "build a group, its Q_B module, and decide very simplicity"; break;
      case vsl::cli::Command::Oracle: help = "exhaustive closure check for N <= 5"; break;
      case vsl::cli::Command::Jac: help = "2-torsion of the jacobian of y^2 = f(x) over F_p"; break;
      case vsl::cli::Command::BuildGroup: help = "build and validate a permutation group"; break;
    }
    auto* sub = app.add_subcommand(vsl::cli::to_string(cmd), help);
    add_flags(sub, fl);
    subs.emplace_back(sub, cmd);
  }
  CLI11_PARSE(app, argc, argv);

  vsl::cli::RunConfig config;
  try {
    for (const auto& [sub, cmd] : subs) {
      if (sub->parsed()) config = make_config(cmd, sub, fl);
    }
  } catch (const vsl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const auto result = vsl::cli::run(config);
  const std::string text = result.report.dump(2) + "\n";
  if (config.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << config.output << "\n";
      return 1;
    }
    out << text;
    std::cout << result.summary << "\n";
  }
  if (result.exit_code == 1) std::cerr << result.summary << "\n";
  return result.exit_code;
}
