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

#include "vsl/groups.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "embedded.hpp"
#include "vsl/error.hpp"

namespace vsl::groups {

using ff::Field;
using ff::FieldElement;
using ff::Matrix;
using perm::Permutation;
using perm::PermGroup;
using perm::Point;

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SL2: return "sl2";
    case Family::Suzuki: return "sz";
    case Family::Mathieu11: return "m11";
    case Family::Mathieu11On12: return "m11_12";
    case Family::Mathieu12: return "m12";
    case Family::L2_11: return "l2_11";
    case Family::Symmetric: return "sym";
    case Family::Alternating: return "alt";
    case Family::Cyclic: return "cyclic";
    case Family::Dihedral: return "dihedral";
  }
  return "unknown";
}

std::string_view to_string(MathieuName name) {
  switch (name) {
    case MathieuName::M11On11: return "m11";
    case MathieuName::M11On12: return "m11_12";
    case MathieuName::M12: return "m12";
    case MathieuName::L2_11: return "l2_11";
  }
  return "unknown";
}

std::vector<FieldElement> normalize_projective(std::vector<FieldElement> v) {
  for (const auto& c : v) {
    if (c.is_zero()) continue;
    const FieldElement inv = c.inverse();
    for (auto& x : v) x = x * inv;
    return v;
  }
  throw Error(Errc::InvalidInput, "zero vector has no projective point");
}

Permutation projective_permutation(const Matrix& m, const std::vector<std::vector<FieldElement>>& points,
                                   const std::function<std::int64_t(const std::vector<FieldElement>&)>& index) {
  std::vector<Point> images;
  images.reserve(points.size());
  for (const auto& p : points) {
    const std::int64_t j = index(m.apply(p));
    if (j < 0) throw Error(Errc::ValidationFailed, "point set is not closed under the matrix action");
    images.push_back(static_cast<Point>(j));
  }
  return Permutation(std::move(images));
}

namespace {

Matrix matrix_from(const Field& f, const std::vector<std::vector<FieldElement>>& rows) {
  return Matrix::from_rows(f, rows);
}

std::string point_label(const std::vector<FieldElement>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].to_string();
  return s + ")";
}

}  // namespace

BuiltGroup build_sl2(const Field& field) {
  if (field.characteristic() != 2) throw Error(Errc::OddCharacteristic, "SL2 family needs characteristic 2");
  if (field.size() < 4) throw Error(Errc::FieldTooSmall, "SL2 family needs q >= 4");
  const auto zero = field.zero();
  const auto one = field.one();
  const auto lambda = field.primitive_element();

  std::vector<Matrix> mats{
      matrix_from(field, {{one, one}, {zero, one}}),
      matrix_from(field, {{zero, one}, {one, zero}}),
      matrix_from(field, {{lambda, zero}, {zero, lambda.inverse()}}),
  };

  std::vector<std::vector<FieldElement>> points{{one, zero}};
  std::vector<std::string> labels{"inf"};
  for (const auto& z : field.elements()) {
    points.push_back({z, one});
    labels.push_back(z.to_string());
  }
  auto index = [](const std::vector<FieldElement>& v) -> std::int64_t {
    if (v[1].is_zero()) return v[0].is_zero() ? -1 : 0;
    return 1 + static_cast<std::int64_t>((v[0] / v[1]).index());
  };

  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(projective_permutation(m, points, index));

  const std::uint64_t q = field.size();
  BuiltGroup out{
      .spec = {.family = Family::SL2, .field = field, .n = 0, .matrix_generators = mats, .action_degree = q + 1},
      .group = PermGroup(q + 1, std::move(gens)),
      .label = "L2(" + std::to_string(q) + ") on P1(F_" + std::to_string(q) + ")",
      .point_labels = std::move(labels),
      .points = std::move(points),
      .claimed_order = (q + 1) * q * (q - 1),
      .citation = "",
  };
  return out;
}

unsigned suzuki_k(const Field& field) {
  const unsigned m = field.degree();
  if (field.characteristic() != 2 || m < 3 || m % 2 == 0) {
    throw Error(Errc::BadExponent, "Suzuki family needs q = 2^(2k+1) with k >= 1, got " + field.to_string());
  }
  return (m - 1) / 2;
}

Matrix suzuki_s(const Field& field, const FieldElement& a, const FieldElement& b) {
  const unsigned k = suzuki_k(field);
  const std::uint64_t sigma = std::uint64_t{1} << (k + 1);
  const auto zero = field.zero();
  const auto one = field.one();
  const auto as = a.pow(sigma);
  return matrix_from(field, {
                                {one, zero, zero, zero},
                                {a, one, zero, zero},
                                {b, as, one, zero},
                                {as * a * a + a * b + b.pow(sigma), as * a + b, a, one},
                            });
}

Matrix suzuki_m(const Field& field, const FieldElement& lambda) {
  const unsigned k = suzuki_k(field);
  if (lambda.is_zero()) throw Error(Errc::ZeroLambda, "M(lambda) needs lambda != 0");
  const std::uint64_t t = std::uint64_t{1} << k;
  const auto l1 = lambda.pow(1 + t);
  const auto l2 = lambda.pow(t);
  Matrix m(field, 4, 4);
  m.set(0, 0, l1);
  m.set(1, 1, l2);
  m.set(2, 2, l2.inverse());
  m.set(3, 3, l1.inverse());
  return m;
}

Matrix suzuki_t(const Field& field) {
  suzuki_k(field);
  Matrix m(field, 4, 4);
  for (std::size_t i = 0; i < 4; ++i) m.set(i, 3 - i, field.one());
  return m;
}

SuzukiGenerators suzuki_generators(const Field& field, const FieldElement& a, const FieldElement& b,
                                   const FieldElement& lambda) {
  return {suzuki_s(field, a, b), suzuki_m(field, lambda), suzuki_t(field)};
}

BuiltGroup build_suzuki(const Field& field) {
  suzuki_k(field);
  const auto zero = field.zero();
  const auto one = field.one();
  std::vector<Matrix> mats{suzuki_s(field, one, zero), suzuki_s(field, zero, one),
                           suzuki_m(field, field.primitive_element()), suzuki_t(field)};

  auto key_of = [](const std::vector<FieldElement>& v) {
    std::vector<std::uint64_t> key;
    for (const auto& c : v) key.push_back(c.index());
    return key;
  };

  std::map<std::vector<std::uint64_t>, std::vector<FieldElement>> found;
  std::vector<std::vector<FieldElement>> queue{{one, zero, zero, zero}};
  found.emplace(key_of(queue[0]), queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& m : mats) {
      auto w = normalize_projective(m.apply(queue[head]));
      if (found.emplace(key_of(w), w).second) queue.push_back(std::move(w));
    }
  }

  std::vector<std::vector<FieldElement>> points;
  std::vector<std::string> labels;
  std::map<std::vector<std::uint64_t>, std::int64_t> lookup;
  for (const auto& [key, p] : found) {
    lookup.emplace(key, static_cast<std::int64_t>(points.size()));
    points.push_back(p);
    labels.push_back(point_label(p));
  }
  auto index = [&](const std::vector<FieldElement>& v) -> std::int64_t {
    auto it = lookup.find(key_of(normalize_projective(v)));
    return it == lookup.end() ? -1 : it->second;
  };

  std::vector<Permutation> gens;
  for (const auto& m : mats) gens.push_back(projective_permutation(m, points, index));

  const std::uint64_t q = field.size();
  const std::size_t degree = points.size();
  BuiltGroup out{
      .spec = {.family = Family::Suzuki, .field = field, .n = 0, .matrix_generators = mats, .action_degree = degree},
      .group = PermGroup(degree, std::move(gens)),
      .label = "Sz(" + std::to_string(q) + ") on its ovoid",
      .point_labels = std::move(labels),
      .points = std::move(points),
      .claimed_order = (q * q + 1) * q * q * (q - 1),
      .citation = "",
  };
  return out;
}

BuiltGroup build_mathieu(MathieuName name) {
  const std::string key(to_string(name));
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(data::kGroupsJson);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ValidationFailed, std::string("group data does not parse: ") + e.what());
  }
  if (!doc.contains("groups") || !doc["groups"].contains(key)) {
    throw Error(Errc::ValidationFailed, "no embedded generators for " + key);
  }
  const auto& entry = doc["groups"][key];

  std::size_t degree = 0;
  std::uint64_t claimed = 0;
  std::vector<Permutation> gens;
  try {
    degree = entry.at("degree").get<std::size_t>();
    claimed = entry.at("claimed_order").get<std::uint64_t>();
    for (const auto& g : entry.at("generators")) {
      auto images = g.get<std::vector<Point>>();
      if (images.size() != degree) throw Error(Errc::ValidationFailed, key + ": generator has wrong degree");
      gens.emplace_back(std::move(images));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ValidationFailed, key + ": malformed entry: " + e.what());
  } catch (const Error& e) {
    throw Error(Errc::ValidationFailed, key + ": " + e.what());
  }
  if (gens.empty()) throw Error(Errc::ValidationFailed, key + ": no generators");

  PermGroup group(degree, std::move(gens));
  const std::uint64_t order = perm::bsgs_build(group).order();
  if (order != claimed) {
    throw Error(Errc::ValidationFailed,
                key + ": order " + std::to_string(order) + " differs from claimed " + std::to_string(claimed));
  }
  if (entry.value("two_transitive", false) && perm::transitivity(group) != perm::Transitivity::TwoTransitive) {
    throw Error(Errc::ValidationFailed, key + ": action is not 2-transitive");
  }
  if (entry.value("perfect", false) && !perm::is_perfect(group)) {
    throw Error(Errc::ValidationFailed, key + ": group is not perfect");
  }

  static constexpr Family kFamily[] = {Family::Mathieu11, Family::Mathieu11On12, Family::Mathieu12, Family::L2_11};
  BuiltGroup out{
      .spec = {.family = kFamily[static_cast<int>(name)], .field = std::nullopt, .n = degree, .matrix_generators = {},
               .action_degree = degree},
      .group = std::move(group),
      .label = entry.value("label", key),
      .point_labels = {},
      .points = {},
      .claimed_order = claimed,
      .citation = entry.value("citation", ""),
  };
  for (std::size_t i = 0; i < degree; ++i) out.point_labels.push_back(std::to_string(i));
  return out;
}

namespace {

Permutation cycle_on(std::size_t n, Point from, Point to) {
  std::vector<Point> cyc(to - from + 1);
  std::iota(cyc.begin(), cyc.end(), from);
  return Permutation::from_cycles(n, {cyc});
}

BuiltGroup classical(Family family, std::size_t n, std::vector<Permutation> gens, std::string label,
                     std::uint64_t order) {
  BuiltGroup out{
      .spec = {.family = family, .field = std::nullopt, .n = n, .matrix_generators = {}, .action_degree = n},
      .group = PermGroup(n, std::move(gens)),
      .label = std::move(label),
      .point_labels = {},
      .points = {},
      .claimed_order = order,
      .citation = "",
  };
  for (std::size_t i = 0; i < n; ++i) out.point_labels.push_back(std::to_string(i));
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) return 0;
    f *= i;
  }
  return f;
}

}  // namespace

BuiltGroup build_symmetric_alternating(std::size_t n, bool alt) {
  const std::size_t min = alt ? 3 : 2;
  if (n < min) throw Error(Errc::DegreeTooSmall, "degree " + std::to_string(n) + " below " + std::to_string(min));
  const auto last = static_cast<Point>(n - 1);
  if (!alt) {
    return classical(Family::Symmetric, n, {Permutation::from_cycles(n, {{0, 1}}), cycle_on(n, 0, last)},
                     "S" + std::to_string(n), factorial(n));
  }
  Permutation big = n % 2 ? cycle_on(n, 0, last) : cycle_on(n, 1, last);
  return classical(Family::Alternating, n, {Permutation::from_cycles(n, {{0, 1, 2}}), std::move(big)},
                   "A" + std::to_string(n), factorial(n) / 2);
}

BuiltGroup build_cyclic(std::size_t n) {
  if (n < 2) throw Error(Errc::DegreeTooSmall, "cyclic family needs n >= 2");
  return classical(Family::Cyclic, n, {cycle_on(n, 0, static_cast<Point>(n - 1))}, "C" + std::to_string(n), n);
}

BuiltGroup build_dihedral(std::size_t n) {
  if (n < 3) throw Error(Errc::DegreeTooSmall, "dihedral family needs n >= 3");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return classical(Family::Dihedral, n, {cycle_on(n, 0, static_cast<Point>(n - 1)), Permutation(std::move(refl))},
                   "D" + std::to_string(n), 2 * n);
}

}  // namespace vsl::groups
