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

#include "commands.hpp"

#include <bit>

#include "report.hpp"
#include "vsl/error.hpp"
#include "vsl/hyperjac.hpp"
#include "vsl/permmod.hpp"
#include "vsl/repcheck.hpp"

namespace vsl::cli {

using nlohmann::json;

namespace {

std::uint64_t require_q(const RunConfig& c) {
  if (!c.q) throw Error(Errc::InvalidInput, "--q is required for family " + c.family);
  if (*c.q < 2 || !std::has_single_bit(*c.q)) throw Error(Errc::OddCharacteristic, "q must be a power of 2");
  return *c.q;
}

std::size_t require_n(const RunConfig& c) {
  if (!c.n) throw Error(Errc::InvalidInput, "--n is required for family " + c.family);
  return *c.n;
}

json base_report(const RunConfig& c) { return {{"schema", kSchemaVersion}, {"command", to_string(c.command)}}; }

CommandResult certify(const RunConfig& config) {
  const auto g = build_group(config);
  const auto [module, basis] = permmod::build_qb(g.group, g.label);
  const auto ledger = repcheck::ledger_for(g, {.use_cited = config.use_ledger, .word_bound = config.word_bound});
  const auto verdict = repcheck::very_simple_verdict(module, ledger);

  json r = base_report(config);
  r["group"] = group_json(g);
  r["module"] = {{"dim", basis.dim}, {"n", basis.n}, {"convention", basis.convention}};
  r["ledger"] = ledger_json(ledger);
  r["verdict"] = verdict_json(verdict);
  r["brauer_nesbitt"] = repcheck::brauer_nesbitt_check(g.group);
  r["use_ledger"] = config.use_ledger;
  if (g.spec.family == groups::Family::SL2 || g.spec.family == groups::Family::Suzuki) {
    const auto family =
        g.spec.family == groups::Family::SL2 ? repcheck::SteinbergFamily::SL2 : repcheck::SteinbergFamily::Suzuki;
    r["steinberg"] = steinberg_json(repcheck::steinberg_uniqueness_report(family, *g.spec.field, config.word_bound));
  }
  const auto status = verdict.status;
  const bool ok =
      status == repcheck::VerdictStatus::VerySimple || status == repcheck::VerdictStatus::VerySimpleModuloLedger;
  return {ok ? 0 : 2, r,
          g.label + ": " + std::string(repcheck::to_string(status)) +
              ", enveloping_dim " + std::to_string(verdict.certificate.enveloping_dim)};
}

CommandResult oracle(const RunConfig& config) {
  const auto g = build_group(config);
  const auto module = permmod::build_qb(g.group, g.label).first;
  const auto result = repcheck::very_simple_bruteforce(module, config.threads);
  json r = base_report(config);
  r["group"] = group_json(g);
  r["module_dim"] = module.dim();
  r["oracle"] = oracle_json(result);
  std::string summary = g.label + ": very_simple = " + (result.very_simple ? "true" : "false");
  if (result.witness) summary += ", witness closure dim " + std::to_string(result.witness_dim);
  return {result.very_simple ? 0 : 2, r, summary};
}

CommandResult jac(const RunConfig& config) {
  if (!config.p) throw Error(Errc::InvalidInput, "--p is required");
  if (config.f.empty()) throw Error(Errc::InvalidInput, "--f is required");
  const auto curve = hyperjac::curve_create(*config.p, config.f);
  json r = base_report(config);
  r["curve"] = curve_json(curve);
  int code = 0;
  std::string summary;
  try {
    const auto t = hyperjac::verify_symdiff_isomorphism(curve, {.pair_cap = config.cap, .seed = 1});
    r["two_torsion"] = torsion_json(t);
    summary = std::to_string(t.classes) + " classes, checks pass";
  } catch (const Error& e) {
    if (e.code() != Errc::VerificationFailed) throw;
    r["two_torsion"] = {{"error", e.what()}};
    code = 2;
    summary = e.what();
  }
  try {
    const auto fr = hyperjac::frobenius_equivariance(curve);
    r["frobenius"] = frobenius_json(fr);
    if (!fr.equivariant || !fr.matches_qb) {
      code = 2;
      summary += "; Frobenius equivariance fails";
    } else {
      summary += "; Frobenius equivariant";
    }
  } catch (const Error& e) {
    if (e.code() != Errc::Unsupported) throw;
    r["frobenius"] = {{"status", "unsupported"}, {"reason", e.what()}};
    summary += "; Frobenius check unsupported";
  }
  return {code, r, summary};
}

CommandResult build_group_cmd(const RunConfig& config) {
  const auto g = build_group(config);
  json r = base_report(config);
  r["group"] = group_json(g);
  return {0, r, g.label + ": order " + std::to_string(r["group"]["order"].get<std::uint64_t>())};
}

}  // namespace

groups::BuiltGroup build_group(const RunConfig& c) {
  const std::string& f = c.family;
  if (f.empty()) throw Error(Errc::InvalidInput, "--family is required");
  if (f == "sl2" || f == "sz") {
    const auto q = require_q(c);
    const auto field = ff::Field::binary(static_cast<unsigned>(std::countr_zero(q)));
    return f == "sl2" ? groups::build_sl2(field) : groups::build_suzuki(field);
  }
  if (f == "m11") return groups::build_mathieu(groups::MathieuName::M11On11);
  if (f == "m11_12") return groups::build_mathieu(groups::MathieuName::M11On12);
  if (f == "m12") return groups::build_mathieu(groups::MathieuName::M12);
  if (f == "l2_11") return groups::build_mathieu(groups::MathieuName::L2_11);
  if (f == "sym") return groups::build_symmetric_alternating(require_n(c), false);
  if (f == "alt") return groups::build_symmetric_alternating(require_n(c), true);
  if (f == "cyclic") return groups::build_cyclic(require_n(c));
  if (f == "dihedral") return groups::build_dihedral(require_n(c));
  throw Error(Errc::InvalidInput, "unknown family '" + f + "'");
}

CommandResult run(const RunConfig& config) {
  try {
    switch (config.command) {
      case Command::Certify: return certify(config);
      case Command::Oracle: return oracle(config);
      case Command::Jac: return jac(config);
      case Command::BuildGroup: return build_group_cmd(config);
    }
  } catch (const Error& e) {
    json r = base_report(config);
    r["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    return {1, r, std::string("error: ") + e.what()};
  }
  return {1, base_report(config), "error: unknown command"};
}

}  // namespace vsl::cli
