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

// Decision layer for very simplicity of F_2[G]-modules: absolute
// irreducibility through the enveloping algebra, dimension exclusions through
// Frobenius-twisted tensor traces, the sufficient criterion (i)-(iii), and an
// exhaustive definitional oracle for tiny modules.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsl/f2linalg.hpp"
#include "vsl/ff.hpp"
#include "vsl/groups.hpp"
#include "vsl/permgrp.hpp"
#include "vsl/permmod.hpp"

namespace vsl::repcheck {

struct EnvelopingResult {
  std::size_t dim = 0;
  std::uint64_t elements_visited = 0;
};

inline constexpr std::size_t kMaxEnvelopingDim = 128;

/// Rank of the span of rho(g) over the group elements enumerated from the
/// BSGS, stopping once the span is all of Mat_N(F_2). Throws
/// DimensionTooLarge for N > kMaxEnvelopingDim.
EnvelopingResult enveloping_dim(const permmod::F2Module& m, const perm::Bsgs& bsgs);
/// Dimension of the unital algebra generated by the generator matrices.
/// Independent of group enumeration; meant for small N.
std::size_t generated_algebra_dim(const permmod::F2Module& m);
bool is_absolutely_irreducible(const permmod::F2Module& m);

/// Largest power of 2 dividing n (n > 0).
std::uint64_t two_part(std::uint64_t n);
/// G 2-transitive, #B odd and #B - 1 equal to the 2-part of |G|.
bool brauer_nesbitt_check(const perm::PermGroup& g);

struct TraceExclusion {
  std::vector<unsigned> subset;
  /// M = sum of 2^i over the subset.
  std::uint64_t exponent = 0;
  /// Trace of the Kronecker product of the twists u^(i), i in subset.
  ff::FieldElement trace;
  /// alpha^M for alpha = tr(u).
  ff::FieldElement analytic;
  bool in_f2 = false;
  bool shortcut_agrees = false;
};

/// Evaluates u as a word in gens (leftmost applied last) and computes the
/// trace of rho_S(u). Throws NonPrimitiveTrace when tr(u) is not primitive,
/// InvalidInput for an out-of-range subset index.
TraceExclusion trace_exclusion(const std::vector<ff::Matrix>& gens, const std::vector<std::size_t>& word,
                               const std::vector<unsigned>& subset);

enum class SteinbergFamily { SL2, Suzuki };

std::string_view to_string(SteinbergFamily f);

struct SteinbergReport {
  SteinbergFamily family;
  ff::Field field;
  /// Natural matrix degree d: 2 or 4.
  std::size_t d = 0;
  unsigned m = 0;
  /// Matrix generators the witness word refers to.
  std::vector<ff::Matrix> witness_generators;
  std::vector<std::size_t> witness_word;
  ff::FieldElement witness_trace;
  std::vector<TraceExclusion> exclusions;
  /// d^#S for every proper nonempty S, sorted and deduplicated.
  std::vector<std::size_t> excluded_dims;
  /// d^#S over all S; with the cited completeness of the rho_S list these
  /// are the only dimensions of absolutely simple modules.
  std::vector<std::size_t> possible_dims;
  std::string completeness_citation;
};

/// For SL2, searches words in the generators of groups::build_sl2 up to
/// word_bound letters (breadth first, lexicographic). For Suzuki, uses
/// S(0,b) T with the smallest-index b whose 2^(k+1)-th power is primitive.
/// Throws WitnessSearchFailed.
SteinbergReport steinberg_uniqueness_report(SteinbergFamily family, const ff::Field& field,
                                            std::size_t word_bound = 12);

enum class FactSource { Computed, Cited };
enum class ExclusionMethod { TraceLemma, Cited };

std::string_view to_string(FactSource s);
std::string_view to_string(ExclusionMethod m);

struct IndexFact {
  std::uint64_t value = 0;
  std::string citation;
};

struct PerfectFact {
  bool value = false;
  FactSource source = FactSource::Computed;
  /// Producing operation for computed facts, citation for cited ones.
  std::string provenance;
};

struct ExcludedDim {
  std::size_t dim = 0;
  ExclusionMethod method = ExclusionMethod::Cited;
  std::string citation;
};

struct FactsLedger {
  std::optional<IndexFact> min_proper_subgroup_index;
  std::optional<PerfectFact> is_perfect;
  /// |G / [G, G]|, computed.
  std::optional<std::uint64_t> abelianization_order;
  std::vector<ExcludedDim> excluded_irreducible_dims;
  /// Complete list of absolutely simple module dimensions when known.
  std::optional<std::vector<std::size_t>> possible_dims;
  std::string possible_dims_citation;
  std::vector<std::string> notes;
};

struct LedgerOptions {
  /// Drop every cited fact, keeping computed ones.
  bool use_cited = true;
  std::size_t word_bound = 12;
};

/// Facts for a constructed group: computed perfectness and abelianization,
/// trace-lemma exclusions for the SL2 and Suzuki families, and the cited
/// entries of the embedded ledger for the group's family.
FactsLedger ledger_for(const groups::BuiltGroup& g, const LedgerOptions& options = {});

enum class ConditionStatus { Pass, Fail, FromLedger, Skipped };
enum class VerdictStatus { VerySimple, NotVerySimple, VerySimpleModuloLedger, Undecided };

std::string_view to_string(ConditionStatus s);
std::string_view to_string(VerdictStatus s);

struct Condition {
  ConditionStatus status = ConditionStatus::Skipped;
  std::string detail;
  std::vector<std::string> citations;
};

struct TensorWitness {
  /// dim of the conjugation-stable closure of End(V_1) (x) Id.
  std::size_t subalgebra_dim = 0;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
};

struct Certificate {
  std::uint64_t group_order = 0;
  std::size_t module_dim = 0;
  std::size_t enveloping_dim = 0;
  std::uint64_t elements_visited = 0;
  std::size_t commutant_dim = 0;
  std::optional<std::uint64_t> min_proper_subgroup_index;
  std::optional<std::uint64_t> abelianization_order;
  std::vector<std::size_t> excluded_dims;
  std::vector<std::pair<std::size_t, std::size_t>> factorizations;
  std::optional<TensorWitness> tensor_witness;
  std::vector<std::string> ledger_citations;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Undecided;
  Condition absolute_simplicity;
  Condition induction_exclusion;
  Condition tensor_exclusion;
  Certificate certificate;
};

/// Applies the sufficient criterion. Never guesses: missing facts give
/// undecided. A failed (i) or an explicit tensor witness gives
/// not_very_simple, since each exhibits a stable subalgebra.
Verdict very_simple_verdict(const permmod::F2Module& m, const FactsLedger& facts);

struct OracleResult {
  bool very_simple = true;
  std::uint64_t closures = 0;
  /// closure dimension -> number of seeds r producing it.
  std::map<std::size_t, std::uint64_t> histogram;
  /// closure dimension -> first seed r (enumeration order) producing it.
  std::map<std::size_t, f2::BitMatrix> witnesses;
  /// First seed whose closure is neither scalars nor everything.
  std::optional<f2::BitMatrix> witness;
  std::size_t witness_dim = 0;
};

inline constexpr std::size_t kOracleMaxDim = 5;

/// Closure of {Id, r} under conjugation by the generators for every r not in
/// {0, Id}. Seeds are enumerated as row-major bit patterns 1 .. 2^(N^2)-1.
/// Work is split over `threads` workers; the result does not depend on it.
/// Throws DimensionTooLarge for N > 5.
OracleResult very_simple_bruteforce(const permmod::F2Module& m, unsigned threads = 1);

}  // namespace vsl::repcheck
