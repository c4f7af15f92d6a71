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

#include "vsl/repcheck.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "embedded.hpp"
#include "ledger_data.hpp"
#include "vsl/error.hpp"

namespace vsl {

namespace data {

const nlohmann::json& ledger() {
  static const nlohmann::json doc = [] {
    try {
      return nlohmann::json::parse(kLedgerJson);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ValidationFailed, std::string("ledger data does not parse: ") + e.what());
    }
  }();
  return doc;
}

const nlohmann::json* ledger_family(const std::string& family) {
  const auto& doc = ledger();
  if (!doc.contains("families") || !doc["families"].contains(family)) return nullptr;
  return &doc["families"][family];
}

}  // namespace data

namespace repcheck {

using f2::BitMatrix;
using f2::SpanBasis;
using ff::FieldElement;
using ff::Matrix;
using perm::Permutation;
using permmod::F2Module;

EnvelopingResult enveloping_dim(const F2Module& m, const perm::Bsgs& bsgs) {
  const std::size_t n = m.dim();
  if (n > kMaxEnvelopingDim) {
    throw Error(Errc::DimensionTooLarge, "enveloping rank supports N <= " + std::to_string(kMaxEnvelopingDim) +
                                             ", got " + std::to_string(n));
  }
  SpanBasis span(n * n);
  EnvelopingResult r;
  bsgs.for_each_element([&](const Permutation& g) {
    ++r.elements_visited;
    span.insert(m.matrix_of(g).flatten());
    return !span.full();
  });
  r.dim = span.rank();
  return r;
}

std::size_t generated_algebra_dim(const F2Module& m) {
  return f2::algebra_closure(m.gen_matrices(), m.gen_matrices()).rank();
}

bool is_absolutely_irreducible(const F2Module& m) {
  const perm::Bsgs b = perm::bsgs_build(m.group());
  return enveloping_dim(m, b).dim == m.dim() * m.dim();
}

std::uint64_t two_part(std::uint64_t n) { return n & (~n + 1); }

bool brauer_nesbitt_check(const perm::PermGroup& g) {
  const std::size_t n = g.degree();
  if (n % 2 == 0) return false;
  if (perm::transitivity(g) != perm::Transitivity::TwoTransitive) return false;
  return two_part(perm::bsgs_build(g).order()) == n - 1;
}

TraceExclusion trace_exclusion(const std::vector<Matrix>& gens, const std::vector<std::size_t>& word,
                               const std::vector<unsigned>& subset) {
  if (gens.empty()) throw Error(Errc::InvalidInput, "no generators");
  const ff::Field& field = gens[0].field();
  Matrix u = Matrix::identity(field, gens[0].rows());
  for (auto i : word) {
    if (i >= gens.size()) throw Error(Errc::InvalidInput, "word letter out of range");
    u = u * gens[i];
  }
  const FieldElement alpha = ff::trace(u);
  if (alpha.is_zero() || !ff::is_primitive(alpha)) {
    throw Error(Errc::NonPrimitiveTrace, "trace " + alpha.to_string() + " of the witness is not primitive");
  }
  std::set<unsigned> seen;
  std::uint64_t exponent = 0;
  Matrix rho = Matrix::identity(field, 1);
  for (auto i : subset) {
    if (i >= field.degree() || !seen.insert(i).second) {
      throw Error(Errc::InvalidInput, "subset index out of range or repeated");
    }
    exponent += std::uint64_t{1} << i;
    rho = ff::kron(rho, ff::frobenius_twist(u, i));
  }
  const FieldElement tr = ff::trace(rho);
  const FieldElement analytic = alpha.pow(exponent);
  return TraceExclusion{
      .subset = subset,
      .exponent = exponent,
      .trace = tr,
      .analytic = analytic,
      .in_f2 = tr.is_zero() || tr.is_one(),
      .shortcut_agrees = tr == analytic,
  };
}

std::string_view to_string(SteinbergFamily f) { return f == SteinbergFamily::SL2 ? "sl2" : "sz"; }

namespace {

// Breadth-first over word lengths, lexicographic within a length.
std::optional<std::vector<std::size_t>> search_primitive_trace(const std::vector<Matrix>& gens, std::size_t bound) {
  const ff::Field& field = gens[0].field();
  std::vector<std::size_t> word;
  std::function<bool(const Matrix&, std::size_t)> dfs = [&](const Matrix& prefix, std::size_t remaining) {
    if (remaining == 0) {
      const auto t = ff::trace(prefix);
      return !t.is_zero() && ff::is_primitive(t);
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      word.push_back(g);
      if (dfs(prefix * gens[g], remaining - 1)) return true;
      word.pop_back();
    }
    return false;
  };
  for (std::size_t len = 1; len <= bound; ++len) {
    word.clear();
    if (dfs(Matrix::identity(field, gens[0].rows()), len)) return word;
  }
  return std::nullopt;
}

}  // namespace

SteinbergReport steinberg_uniqueness_report(SteinbergFamily family, const ff::Field& field, std::size_t word_bound) {
  std::vector<Matrix> gens;
  std::vector<std::size_t> word;
  std::size_t d = 0;
  if (family == SteinbergFamily::SL2) {
    d = 2;
    gens = groups::build_sl2(field).spec.matrix_generators;
    auto found = search_primitive_trace(gens, word_bound);
    if (!found) {
      throw Error(Errc::WitnessSearchFailed,
                  "no word of length <= " + std::to_string(word_bound) + " has primitive trace");
    }
    word = *found;
  } else {
    d = 4;
    const unsigned k = groups::suzuki_k(field);
    const std::uint64_t sigma = std::uint64_t{1} << (k + 1);
    std::optional<FieldElement> b;
    for (const auto& x : field.elements()) {
      if (!x.is_zero() && ff::is_primitive(x.pow(sigma))) {
        b = x;
        break;
      }
    }
    if (!b) throw Error(Errc::WitnessSearchFailed, "no b with primitive b^(2^(k+1))");
    gens = {groups::suzuki_s(field, field.zero(), *b), groups::suzuki_t(field)};
    word = {0, 1};
  }

  const unsigned m = field.degree();
  std::vector<TraceExclusion> exclusions;
  std::set<std::size_t> excluded;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    std::vector<unsigned> subset;
    for (unsigned i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) subset.push_back(i);
    }
    auto ex = trace_exclusion(gens, word, subset);
    if (!ex.in_f2) {
      std::size_t dim = 1;
      for (std::size_t j = 0; j < subset.size(); ++j) dim *= d;
      excluded.insert(dim);
    }
    exclusions.push_back(std::move(ex));
  }
  std::vector<std::size_t> possible;
  for (std::size_t j = 0, dim = 1; j <= m; ++j, dim *= d) possible.push_back(dim);

  std::string citation;
  if (const auto* entry = data::ledger_family(std::string(to_string(family)))) {
    citation = entry->value("completeness_citation", "");
  }
  const FieldElement witness_trace = ff::trace([&] {
    Matrix u = Matrix::identity(field, d);
    for (auto i : word) u = u * gens[i];
    return u;
  }());
  return SteinbergReport{
      .family = family,
      .field = field,
      .d = d,
      .m = m,
      .witness_generators = std::move(gens),
      .witness_word = std::move(word),
      .witness_trace = witness_trace,
      .exclusions = std::move(exclusions),
      .excluded_dims = {excluded.begin(), excluded.end()},
      .possible_dims = std::move(possible),
      .completeness_citation = std::move(citation),
  };
}

std::string_view to_string(FactSource s) { return s == FactSource::Computed ? "computed" : "cited"; }
std::string_view to_string(ExclusionMethod m) { return m == ExclusionMethod::TraceLemma ? "trace_lemma" : "cited"; }

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

}  // namespace

FactsLedger ledger_for(const groups::BuiltGroup& g, const LedgerOptions& options) {
  FactsLedger facts;
  facts.abelianization_order = perm::abelianization_order(g.group);
  facts.is_perfect = PerfectFact{*facts.abelianization_order == 1, FactSource::Computed, "is_perfect"};

  const auto family = g.spec.family;
  const std::uint64_t n = g.group.degree();
  const std::uint64_t q = g.spec.field ? g.spec.field->size() : 0;

  if (family == groups::Family::SL2 || family == groups::Family::Suzuki) {
    const auto report = steinberg_uniqueness_report(
        family == groups::Family::SL2 ? SteinbergFamily::SL2 : SteinbergFamily::Suzuki, *g.spec.field,
        options.word_bound);
    for (auto dim : report.excluded_dims) {
      facts.excluded_irreducible_dims.push_back({dim, ExclusionMethod::TraceLemma, "steinberg_uniqueness_report"});
    }
    if (options.use_cited && !report.completeness_citation.empty()) {
      facts.possible_dims = report.possible_dims;
      facts.possible_dims_citation = report.completeness_citation;
    }
  }

  if (!options.use_cited) {
    facts.notes.push_back("cited facts disabled");
    return facts;
  }
  const auto* entry = data::ledger_family(std::string(groups::to_string(family)));
  if (!entry) return facts;

  if (entry->contains("min_proper_subgroup_index")) {
    const auto& idx = (*entry)["min_proper_subgroup_index"];
    const std::string citation = idx.value("citation", "");
    std::optional<std::uint64_t> value;
    if (idx.contains("value")) {
      value = idx["value"].get<std::uint64_t>();
    } else {
      const std::string rule = idx.value("rule", "");
      const std::uint64_t min_n = idx.value("min_n", std::uint64_t{0});
      if (n >= min_n) {
        if (rule == "q+1") value = q + 1;
        if (rule == "q^2+1") value = q * q + 1;
        if (rule == "n") value = n;
        if (rule == "2") value = 2;
        if (rule == "smallest_prime_factor") value = smallest_prime_factor(n);
      }
    }
    if (value && !citation.empty()) facts.min_proper_subgroup_index = IndexFact{*value, citation};
  }
  if (entry->contains("excluded_dims")) {
    for (const auto& e : (*entry)["excluded_dims"]) {
      if (n < e.value("min_n", std::uint64_t{0})) continue;
      const std::string citation = e.value("citation", "");
      if (citation.empty()) continue;
      facts.excluded_irreducible_dims.push_back({e.at("dim").get<std::size_t>(), ExclusionMethod::Cited, citation});
    }
  }
  return facts;
}

std::string_view to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Pass: return "pass";
    case ConditionStatus::Fail: return "fail";
    case ConditionStatus::FromLedger: return "from_ledger";
    case ConditionStatus::Skipped: return "skipped";
  }
  return "unknown";
}

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::VerySimple: return "very_simple";
    case VerdictStatus::NotVerySimple: return "not_very_simple";
    case VerdictStatus::VerySimpleModuloLedger: return "very_simple_modulo_ledger";
    case VerdictStatus::Undecided: return "undecided";
  }
  return "unknown";
}

namespace {

void add_citation(std::vector<std::string>& list, const std::string& c) {
  if (!c.empty() && std::find(list.begin(), list.end(), c) == list.end()) list.push_back(c);
}

Condition check_absolute_simplicity(const F2Module& m, const perm::Bsgs& bsgs, Certificate& cert) {
  const std::size_t n = m.dim();
  const auto env = enveloping_dim(m, bsgs);
  cert.enveloping_dim = env.dim;
  cert.elements_visited = env.elements_visited;
  cert.commutant_dim = f2::commutant_dim(m.gen_matrices());
  Condition c;
  if (env.dim == n * n) {
    c.status = ConditionStatus::Pass;
    c.detail = "enveloping_dim = N^2 = " + std::to_string(n * n);
  } else {
    c.status = ConditionStatus::Fail;
    c.detail = "enveloping_dim = " + std::to_string(env.dim) + " < N^2 = " + std::to_string(n * n) +
               "; the image algebra is a conjugation-stable subalgebra of dimension " + std::to_string(env.dim);
  }
  return c;
}

Condition check_induction(std::size_t n, const FactsLedger& facts, Certificate& cert) {
  Condition c;
  std::vector<std::size_t> divisors;
  for (std::size_t r = 2; r < n; ++r) {
    if (n % r == 0) divisors.push_back(r);
  }

  ConditionStatus index_status = ConditionStatus::Pass;
  std::string index_detail;
  if (divisors.empty()) {
    index_detail = "N has no divisor r with 1 < r < N";
  } else if (!facts.min_proper_subgroup_index) {
    index_status = ConditionStatus::Skipped;
    index_detail = "minimal proper subgroup index not in ledger";
  } else {
    const auto& idx = *facts.min_proper_subgroup_index;
    cert.min_proper_subgroup_index = idx.value;
    const auto worst = divisors.back();
    if (worst < idx.value) {
      index_status = ConditionStatus::FromLedger;
      index_detail = "every divisor r of N with 1 < r < N is below the minimal proper subgroup index " +
                     std::to_string(idx.value);
      add_citation(c.citations, idx.citation);
    } else {
      index_status = ConditionStatus::Fail;
      index_detail = "divisor " + std::to_string(worst) + " of N is not below the minimal proper subgroup index " +
                     std::to_string(idx.value) + "; a subgroup of that index cannot be ruled out";
      add_citation(c.citations, idx.citation);
    }
  }

  ConditionStatus cyclic_status = ConditionStatus::Pass;
  std::string cyclic_detail;
  if (!facts.abelianization_order) {
    cyclic_status = ConditionStatus::Skipped;
    cyclic_detail = "abelianization order unknown";
  } else {
    const auto a = *facts.abelianization_order;
    cert.abelianization_order = a;
    if (a % n != 0) {
      cyclic_detail = "|G/[G,G]| = " + std::to_string(a) + " is not divisible by N, so no cyclic quotient of order N";
    } else {
      cyclic_status = ConditionStatus::Fail;
      cyclic_detail = "|G/[G,G]| = " + std::to_string(a) + " is divisible by N; a cyclic quotient of order N is possible";
    }
  }

  if (index_status == ConditionStatus::Fail || cyclic_status == ConditionStatus::Fail) {
    c.status = ConditionStatus::Fail;
  } else if (index_status == ConditionStatus::Skipped || cyclic_status == ConditionStatus::Skipped) {
    c.status = ConditionStatus::Skipped;
  } else {
    c.status = index_status;
  }
  c.detail = index_detail + "; " + cyclic_detail;
  return c;
}

Condition check_tensor(const F2Module& m, const FactsLedger& facts, Certificate& cert) {
  const std::size_t n = m.dim();
  Condition c;
  for (std::size_t a = 2; a * a <= n; ++a) {
    if (n % a == 0) cert.factorizations.emplace_back(a, n / a);
  }
  for (const auto& e : facts.excluded_irreducible_dims) cert.excluded_dims.push_back(e.dim);
  std::sort(cert.excluded_dims.begin(), cert.excluded_dims.end());
  cert.excluded_dims.erase(std::unique(cert.excluded_dims.begin(), cert.excluded_dims.end()), cert.excluded_dims.end());

  // An explicit tensor decomposition: End(V_1) (x) Id is conjugation stable.
  if (m.left_factor() && m.right_factor() && m.left_factor()->dim() > 1 && m.right_factor()->dim() > 1) {
    const std::size_t d1 = m.left_factor()->dim();
    const std::size_t d2 = m.right_factor()->dim();
    std::vector<BitMatrix> seed;
    for (std::size_t i = 0; i < d1; ++i) {
      for (std::size_t j = 0; j < d1; ++j) {
        BitMatrix e(d1, d1);
        e.set(i, j);
        seed.push_back(f2::kron(e, BitMatrix::identity(d2)));
      }
    }
    const std::size_t dim = f2::algebra_closure(seed, m.gen_matrices()).rank();
    if (dim != 1 && dim != n * n) {
      cert.tensor_witness = TensorWitness{dim, d1, d2};
      c.status = ConditionStatus::Fail;
      c.detail = "V = V1 (x) V2 with dims " + std::to_string(d1) + " and " + std::to_string(d2) +
                 "; End(V1) (x) Id is a conjugation-stable subalgebra of dimension " + std::to_string(dim);
      return c;
    }
  }

  if (cert.factorizations.empty()) {
    c.status = ConditionStatus::Pass;
    c.detail = "N has no factorization N = ab with 1 < a <= b < N";
    return c;
  }

  auto exclusion_for = [&](std::size_t dim) -> const ExcludedDim* {
    const ExcludedDim* best = nullptr;
    for (const auto& e : facts.excluded_irreducible_dims) {
      if (e.dim != dim) continue;
      if (!best || e.method == ExclusionMethod::TraceLemma) best = &e;
    }
    return best;
  };
  auto impossible = [&](std::size_t dim) {
    return facts.possible_dims &&
           std::find(facts.possible_dims->begin(), facts.possible_dims->end(), dim) == facts.possible_dims->end();
  };

  bool cited = false;
  bool used_universe = false;
  std::string detail;
  for (const auto& [a, b] : cert.factorizations) {
    std::string how;
    bool covered = false;
    for (std::size_t x : {a, b}) {
      if (const auto* e = exclusion_for(x); e && e->method == ExclusionMethod::TraceLemma) {
        how = std::to_string(x) + " excluded by trace_lemma";
        covered = true;
        break;
      }
    }
    if (!covered) {
      for (std::size_t x : {a, b}) {
        if (impossible(x)) {
          how = std::to_string(x) + " is not a dimension d^#S";
          used_universe = true;
          covered = true;
          break;
        }
      }
    }
    if (!covered) {
      for (std::size_t x : {a, b}) {
        if (const auto* e = exclusion_for(x)) {
          how = std::to_string(x) + " excluded by cited fact";
          add_citation(c.citations, e->citation);
          cited = true;
          covered = true;
          break;
        }
      }
    }
    if (!covered) {
      c.status = ConditionStatus::Fail;
      c.detail = "factorization " + std::to_string(a) + "x" + std::to_string(b) +
                 " is not excluded: neither dimension is known to carry no absolutely simple module";
      return c;
    }
    detail += (detail.empty() ? "" : "; ") + std::to_string(a) + "x" + std::to_string(b) + ": " + how;
  }
  if (used_universe) add_citation(c.citations, facts.possible_dims_citation);
  c.status = cited ? ConditionStatus::FromLedger : ConditionStatus::Pass;
  c.detail = detail;
  return c;
}

}  // namespace

Verdict very_simple_verdict(const F2Module& m, const FactsLedger& facts) {
  Verdict v;
  const std::size_t n = m.dim();
  const perm::Bsgs bsgs = perm::bsgs_build(m.group());
  v.certificate.group_order = bsgs.order();
  v.certificate.module_dim = n;

  if (n <= 1) {
    v.certificate.enveloping_dim = n;
    v.certificate.commutant_dim = n;
    for (auto* c : {&v.absolute_simplicity, &v.induction_exclusion, &v.tensor_exclusion}) {
      c->status = ConditionStatus::Pass;
      c->detail = "dimension <= 1";
    }
    v.status = VerdictStatus::VerySimple;
    return v;
  }

  v.absolute_simplicity = check_absolute_simplicity(m, bsgs, v.certificate);
  v.induction_exclusion = check_induction(n, facts, v.certificate);
  v.tensor_exclusion = check_tensor(m, facts, v.certificate);

  for (const auto* c : {&v.absolute_simplicity, &v.induction_exclusion, &v.tensor_exclusion}) {
    for (const auto& cite : c->citations) add_citation(v.certificate.ledger_citations, cite);
  }

  const auto all = {v.absolute_simplicity.status, v.induction_exclusion.status, v.tensor_exclusion.status};
  auto any = [&](ConditionStatus s) { return std::find(all.begin(), all.end(), s) != all.end(); };
  if (v.absolute_simplicity.status == ConditionStatus::Fail || v.certificate.tensor_witness) {
    v.status = VerdictStatus::NotVerySimple;
  } else if (any(ConditionStatus::Fail) || any(ConditionStatus::Skipped)) {
    v.status = VerdictStatus::Undecided;
  } else if (any(ConditionStatus::FromLedger)) {
    v.status = VerdictStatus::VerySimpleModuloLedger;
  } else {
    v.status = VerdictStatus::VerySimple;
  }
  return v;
}

namespace {

struct OracleChunk {
  std::map<std::size_t, std::uint64_t> histogram;
  std::map<std::size_t, std::uint64_t> first_seed;
  std::uint64_t closures = 0;
};

}  // namespace

OracleResult very_simple_bruteforce(const F2Module& m, unsigned threads) {
  const std::size_t n = m.dim();
  if (n > kOracleMaxDim) {
    throw Error(Errc::DimensionTooLarge,
                "exhaustive oracle supports N <= " + std::to_string(kOracleMaxDim) + ", got " + std::to_string(n));
  }
  const f2::SmallClosureEngine engine(m.gen_matrices());
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t identity_seed = 0;
  for (std::size_t i = 0; i < n; ++i) identity_seed |= std::uint64_t{1} << (i * n + i);

  auto to_word = [&](std::uint64_t seed) {
    f2::Word w = 0;
    for (std::size_t i = 0; i < n; ++i) w |= ((seed >> (i * n)) & row_mask) << (8 * i);
    return w;
  };

  auto run = [&](std::uint64_t lo, std::uint64_t hi, OracleChunk& out) {
    for (std::uint64_t seed = lo; seed < hi; ++seed) {
      if (seed == identity_seed) continue;
      const f2::Word w = to_word(seed);
      const std::size_t d = engine.closure_dim(std::span<const f2::Word>(&w, 1));
      ++out.closures;
      ++out.histogram[d];
      out.first_seed.emplace(d, seed);
    }
  };

  threads = std::max(1u, threads);
  std::vector<OracleChunk> chunks(threads);
  const std::uint64_t span = (total - 1 + threads - 1) / threads;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = 1 + t * span;
    const std::uint64_t hi = std::min(total, lo + span);
    if (lo >= hi) continue;
    if (threads == 1) {
      run(lo, hi, chunks[t]);
    } else {
      workers.emplace_back(run, lo, hi, std::ref(chunks[t]));
    }
  }
  for (auto& w : workers) w.join();

  OracleResult r;
  std::map<std::size_t, std::uint64_t> first;
  for (const auto& c : chunks) {
    r.closures += c.closures;
    for (const auto& [d, count] : c.histogram) r.histogram[d] += count;
    for (const auto& [d, seed] : c.first_seed) {
      auto it = first.find(d);
      if (it == first.end() || seed < it->second) first[d] = seed;
    }
  }
  std::optional<std::uint64_t> witness_seed;
  for (const auto& [d, seed] : first) {
    r.witnesses.emplace(d, f2::SmallClosureEngine::unpack(to_word(seed), n));
    if (d != 1 && d != n * n && (!witness_seed || seed < *witness_seed)) {
      witness_seed = seed;
      r.witness_dim = d;
    }
  }
  if (witness_seed) {
    r.very_simple = false;
    r.witness = f2::SmallClosureEngine::unpack(to_word(*witness_seed), n);
  }
  return r;
}

}  // namespace repcheck
}  // namespace vsl
