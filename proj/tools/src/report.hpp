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

// JSON encodings of library results. Objects use nlohmann::json's default
// sorted map, so dumps are key-sorted.

#include <nlohmann/json.hpp>

#include "vsl/f2linalg.hpp"
#include "vsl/ff.hpp"
#include "vsl/groups.hpp"
#include "vsl/hyperjac.hpp"
#include "vsl/repcheck.hpp"

namespace vsl::cli {

inline constexpr int kSchemaVersion = 1;

nlohmann::json field_json(const ff::Field& f);
/// Coefficient vector, constant term first.
nlohmann::json element_json(const ff::FieldElement& x);
nlohmann::json matrix_json(const f2::BitMatrix& m);
nlohmann::json group_json(const groups::BuiltGroup& g);
nlohmann::json verdict_json(const repcheck::Verdict& v);
nlohmann::json oracle_json(const repcheck::OracleResult& r);
nlohmann::json steinberg_json(const repcheck::SteinbergReport& r);
nlohmann::json ledger_json(const repcheck::FactsLedger& l);
nlohmann::json curve_json(const hyperjac::Curve& c);
nlohmann::json torsion_json(const hyperjac::TwoTorsionReport& r);
nlohmann::json frobenius_json(const hyperjac::FrobeniusReport& r);

}  // namespace vsl::cli
