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

#include <gtest/gtest.h>

#include <cstdlib>

#include "commands.hpp"
#include "config.hpp"
#include "vsl/error.hpp"

namespace vsl::cli {
namespace {

RunConfig make(Command c, const std::string& family) {
  RunConfig r;
  r.command = c;
  r.family = family;
  return r;
}

TEST(Config, CoeffList) {
  EXPECT_EQ(parse_coeff_list("1,0,-3, 2"), (std::vector<std::int64_t>{1, 0, -3, 2}));
  EXPECT_THROW(parse_coeff_list(""), Error);
  EXPECT_THROW(parse_coeff_list("1,x"), Error);
  EXPECT_THROW(parse_coeff_list("1,,2"), Error);
}

TEST(Config, JsonKeys) {
  RunConfig c;
  apply_config_json(c, {{"command", "oracle"}, {"family", "alt"}, {"n", 5}, {"no_ledger", true}, {"f", "1,2"}});
  EXPECT_EQ(c.command, Command::Oracle);
  EXPECT_EQ(c.family, "alt");
  EXPECT_EQ(*c.n, 5u);
  EXPECT_FALSE(c.use_ledger);
  EXPECT_EQ(c.f, (std::vector<std::int64_t>{1, 2}));
  EXPECT_THROW(apply_config_json(c, {{"famliy", "alt"}}), Error);
  EXPECT_THROW(apply_config_json(c, {{"n", "five"}}), Error);
  EXPECT_THROW(apply_config_json(c, {{"command", "prove"}}), Error);
  EXPECT_THROW(apply_config_json(c, nlohmann::json::array()), Error);
}

TEST(Config, ThreadsFromEnv) {
  ::unsetenv("VSL_THREADS");
  EXPECT_EQ(threads_from_env(3), 3u);
  ::setenv("VSL_THREADS", "4", 1);
  EXPECT_EQ(threads_from_env(), 4u);
  ::setenv("VSL_THREADS", "0", 1);
  EXPECT_THROW(threads_from_env(), Error);
  ::setenv("VSL_THREADS", "2x", 1);
  EXPECT_THROW(threads_from_env(), Error);
  ::unsetenv("VSL_THREADS");
}

TEST(Certify, ExitCodesAndStatus) {
  auto c = make(Command::Certify, "sl2");
  c.q = 8;
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["schema"], 1);
  EXPECT_EQ(r.report["verdict"]["status"], "very_simple_modulo_ledger");
  EXPECT_EQ(r.report["verdict"]["certificate"]["enveloping_dim"], 64);
  EXPECT_EQ(r.report["steinberg"]["excluded_dims"], nlohmann::json({2, 4}));

  c.use_ledger = false;
  r = run(c);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["verdict"]["status"], "undecided");

  auto cyc = make(Command::Certify, "cyclic");
  cyc.n = 5;
  r = run(cyc);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.report["verdict"]["status"], "not_very_simple");
  EXPECT_EQ(r.report["verdict"]["certificate"]["stable_subalgebra"]["dim"], 4);
}

TEST(Certify, InputErrors) {
  EXPECT_EQ(run(make(Command::Certify, "")).exit_code, 1);
  EXPECT_EQ(run(make(Command::Certify, "monster")).exit_code, 1);
  EXPECT_EQ(run(make(Command::Certify, "sl2")).exit_code, 1);
  auto odd = make(Command::Certify, "sl2");
  odd.q = 9;
  const auto r = run(odd);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report["error"]["code"], "OddCharacteristic");
}

TEST(Oracle, ExitCodes) {
  auto a = make(Command::Oracle, "alt");
  a.n = 5;
  EXPECT_EQ(run(a).exit_code, 0);
  auto s = make(Command::Oracle, "sym");
  s.n = 5;
  EXPECT_EQ(run(s).exit_code, 0);
  auto c = make(Command::Oracle, "cyclic");
  c.n = 5;
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.report["oracle"].contains("witness"));
  auto big = make(Command::Oracle, "sym");
  big.n = 7;
  EXPECT_EQ(run(big).report["error"]["code"], "DimensionTooLarge");
}

TEST(Jac, ExitCodes) {
  RunConfig c;
  c.command = Command::Jac;
  c.p = 11;
  c.f = {1, -10, 35, -50, 24, 0};
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["two_torsion"]["classes"], 16);
  EXPECT_EQ(r.report["frobenius"]["equivariant"], true);

  c.p = 5;
  c.f = {1, 0, 0, 0, -1, -1};
  r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.report["curve"]["splitting_degree"], 5);

  c.p = 11;
  c.f = {1, 0, 0, 0, 0, 0};
  r = run(c);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.report["error"]["code"], "NotSquarefree");

  c.f.clear();
  EXPECT_EQ(run(c).exit_code, 1);
}

TEST(Report, Deterministic) {
  auto c = make(Command::Certify, "m11");
  EXPECT_EQ(run(c).report.dump(2), run(c).report.dump(2));
  auto o = make(Command::Oracle, "dihedral");
  o.n = 5;
  o.threads = 1;
  const auto one = run(o).report.dump();
  o.threads = 3;
  EXPECT_EQ(run(o).report.dump(), one);
}

TEST(Report, KeysSorted) {
  auto c = make(Command::BuildGroup, "m12");
  const auto r = run(c);
  EXPECT_EQ(r.report["group"]["order"], 95040);
  std::string prev;
  for (const auto& [k, v] : r.report["group"].items()) {
    EXPECT_LT(prev, k);
    prev = k;
  }
}

}  // namespace
}  // namespace vsl::cli
