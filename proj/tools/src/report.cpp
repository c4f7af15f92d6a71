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

#include "report.hpp"

#include "vsl/permgrp.hpp"

namespace vsl::cli {

using nlohmann::json;

json field_json(const ff::Field& f) {
  return {{"char", f.characteristic()}, {"degree", f.degree()}, {"modulus", f.spec().modulus}};
}

json element_json(const ff::FieldElement& x) { return x.coeffs(); }

json matrix_json(const f2::BitMatrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"hex_rows", m.to_hex_rows()}};
}

json group_json(const groups::BuiltGroup& g) {
  const auto bsgs = perm::bsgs_build(g.group);
  json gens = json::array();
  for (const auto& s : g.group.generators()) gens.push_back(s.images());
  json out = {
      {"label", g.label},
      {"family", std::string(groups::to_string(g.spec.family))},
      {"degree", g.group.degree()},
      {"order", bsgs.order()},
      {"base", bsgs.base()},
      {"generators", gens},
      {"transitivity", std::string(perm::to_string(perm::transitivity(g.group)))},
      {"perfect", perm::is_perfect(g.group)},
  };
  if (g.claimed_order) out["claimed_order"] = *g.claimed_order;
  if (!g.citation.empty()) out["citation"] = g.citation;
  if (g.spec.field) out["field"] = field_json(*g.spec.field);
  return out;
}

namespace {

json condition_json(const repcheck::Condition& c) {
  return {{"status", std::string(repcheck::to_string(c.status))}, {"detail", c.detail}, {"citations", c.citations}};
}

}  // namespace

json verdict_json(const repcheck::Verdict& v) {
  const auto& c = v.certificate;
  json factorizations = json::array();
  for (const auto& [a, b] : c.factorizations) factorizations.push_back({a, b});
  json cert = {
      {"group_order", c.group_order},
      {"module_dim", c.module_dim},
      {"enveloping_dim", c.enveloping_dim},
      {"elements_visited", c.elements_visited},
      {"commutant_dim", c.commutant_dim},
      {"excluded_dims", c.excluded_dims},
      {"factorizations", factorizations},
      {"ledger_citations", c.ledger_citations},
      {"min_proper_subgroup_index", c.min_proper_subgroup_index ? json(*c.min_proper_subgroup_index) : json()},
      {"abelianization_order", c.abelianization_order ? json(*c.abelianization_order) : json()},
  };
  if (c.tensor_witness) {
    cert["tensor_witness"] = {{"subalgebra_dim", c.tensor_witness->subalgebra_dim},
                              {"left_dim", c.tensor_witness->left_dim},
                              {"right_dim", c.tensor_witness->right_dim},
                              {"structure", "End(V1) (x) Id"}};
  }
  if (c.module_dim > 1 && c.enveloping_dim < c.module_dim * c.module_dim) {
    // The image algebra is stable under conjugation by the group.
    cert["stable_subalgebra"] = {{"structure", "span of rho(G)"}, {"dim", c.enveloping_dim}};
  }
  return {
      {"status", std::string(repcheck::to_string(v.status))},
      {"conditions",
       {{"absolute_simplicity", condition_json(v.absolute_simplicity)},
        {"induction_exclusion", condition_json(v.induction_exclusion)},
        {"tensor_exclusion", condition_json(v.tensor_exclusion)}}},
      {"certificate", cert},
  };
}

json oracle_json(const repcheck::OracleResult& r) {
  json hist = json::object();
  for (const auto& [d, count] : r.histogram) hist[std::to_string(d)] = count;
  json witnesses = json::object();
  for (const auto& [d, m] : r.witnesses) witnesses[std::to_string(d)] = matrix_json(m);
  json out = {
      {"very_simple", r.very_simple},
      {"closures", r.closures},
      {"histogram", hist},
      {"witnesses_by_dim", witnesses},
  };
  if (r.witness) {
    out["witness"] = matrix_json(*r.witness);
    out["witness_dim"] = r.witness_dim;
  }
  return out;
}

json steinberg_json(const repcheck::SteinbergReport& r) {
  json ex = json::array();
  for (const auto& e : r.exclusions) {
    ex.push_back({{"subset", e.subset},
                  {"exponent", e.exponent},
                  {"trace", element_json(e.trace)},
                  {"analytic", element_json(e.analytic)},
                  {"in_f2", e.in_f2},
                  {"shortcut_agrees", e.shortcut_agrees}});
  }
  return {
      {"family", std::string(repcheck::to_string(r.family))},
      {"d", r.d},
      {"m", r.m},
      {"witness_word", r.witness_word},
      {"witness_trace", element_json(r.witness_trace)},
      {"exclusions", ex},
      {"excluded_dims", r.excluded_dims},
      {"possible_dims", r.possible_dims},
      {"completeness_citation", r.completeness_citation},
  };
}

json ledger_json(const repcheck::FactsLedger& l) {
  json out = json::object();
  if (l.min_proper_subgroup_index) {
    out["min_proper_subgroup_index"] = {{"value", l.min_proper_subgroup_index->value},
                                        {"citation", l.min_proper_subgroup_index->citation}};
  }
  if (l.is_perfect) {
    out["is_perfect"] = {{"value", l.is_perfect->value},
                         {"source", std::string(repcheck::to_string(l.is_perfect->source))},
                         {"provenance", l.is_perfect->provenance}};
  }
  if (l.abelianization_order) out["abelianization_order"] = *l.abelianization_order;
  json dims = json::array();
  for (const auto& e : l.excluded_irreducible_dims) {
    dims.push_back({{"dim", e.dim}, {"method", std::string(repcheck::to_string(e.method))}, {"citation", e.citation}});
  }
  out["excluded_irreducible_dims"] = dims;
  if (l.possible_dims) {
    out["possible_dims"] = {{"dims", *l.possible_dims}, {"citation", l.possible_dims_citation}};
  }
  out["notes"] = l.notes;
  return out;
}

json curve_json(const hyperjac::Curve& c) {
  json roots = json::array();
  for (const auto& r : c.roots) roots.push_back(element_json(r));
  json f = json::array();
  for (auto it = c.f_coeffs.rbegin(); it != c.f_coeffs.rend(); ++it) f.push_back(it->index());
  return {
      {"base_field", field_json(c.base_field)},
      {"f_descending", f},
      {"n", c.n},
      {"genus", c.genus},
      {"splitting_degree", c.splitting_degree},
      {"working_field", field_json(c.field)},
      {"roots", roots},
      {"model", hyperjac::to_string(c.model)},
  };
}

json torsion_json(const hyperjac::TwoTorsionReport& r) {
  json checks = {
      {"symdiff_law", r.symdiff_law},
      {"doubling_zero", r.doubling_zero},
      {"distinctness", r.distinctness},
      {"class_count", r.class_count},
  };
  if (r.full_set_zero) checks["full_set_zero"] = *r.full_set_zero;
  return {
      {"subsets", r.subsets},
      {"classes", r.classes},
      {"expected_classes", r.expected_classes},
      {"pairs_checked", r.pairs_checked},
      {"pairs_exhaustive", r.pairs_exhaustive},
      {"checks", checks},
  };
}

json frobenius_json(const hyperjac::FrobeniusReport& r) {
  return {
      {"root_permutation", r.root_permutation},
      {"classes_checked", r.classes_checked},
      {"equivariant", r.equivariant},
      {"matches_qb", r.matches_qb},
  };
}

}  // namespace vsl::cli
