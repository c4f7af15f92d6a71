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

#include <map>
#include <random>
#include <set>

#include "vsl/error.hpp"
#include "vsl/groups.hpp"

namespace vsl::groups {
namespace {

using ff::Field;
using perm::bsgs_build;
using perm::Transitivity;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidInput;
}

TEST(Sl2, Q8) {
  const auto g = build_sl2(Field::binary(3));
  EXPECT_EQ(g.group.degree(), 9u);
  EXPECT_EQ(bsgs_build(g.group).order(), 504u);
  EXPECT_EQ(bsgs_build(g.group, {.descending = true}).order(), 504u);
  EXPECT_EQ(perm::transitivity(g.group), Transitivity::TwoTransitive);
  EXPECT_EQ(g.point_labels[0], "inf");
}

TEST(Sl2, Q4IsA5Sized) {
  const auto g = build_sl2(Field::binary(2));
  EXPECT_EQ(g.group.degree(), 5u);
  EXPECT_EQ(bsgs_build(g.group).order(), 60u);
  EXPECT_TRUE(perm::is_perfect(g.group));
}

TEST(Sl2, Errors) {
  EXPECT_EQ(code_of([] { build_sl2(Field::prime(3)); }), Errc::OddCharacteristic);
  EXPECT_EQ(code_of([] { build_sl2(Field::prime(2)); }), Errc::FieldTooSmall);
}

TEST(Sl2, BorelStabilizerOfInfinity) {
  for (unsigned m : {2u, 3u, 4u}) {
    const auto g = build_sl2(Field::binary(m));
    const std::uint64_t q = std::uint64_t{1} << m;
    EXPECT_EQ(bsgs_build(perm::point_stabilizer(g.group, 0)).order(), q * (q - 1));
    EXPECT_EQ(bsgs_build(g.group).order(), (q + 1) * q * (q - 1));
  }
}

// Every element of F_8 is the trace of some determinant-1 matrix.
TEST(Sl2, AllTracesOccur) {
  const Field f = Field::binary(3);
  std::set<std::uint64_t> traces;
  for (const auto& a : f.elements())
    for (const auto& b : f.elements())
      for (const auto& c : f.elements())
        for (const auto& d : f.elements())
          if ((a * d - b * c).is_one()) traces.insert((a + d).index());
  EXPECT_EQ(traces.size(), 8u);
}

TEST(Sl2, MatrixToPermutationIsHomomorphism) {
  const auto g = build_sl2(Field::binary(3));
  const auto& mats = g.spec.matrix_generators;
  std::mt19937 rng(1);
  auto index = [](const std::vector<ff::FieldElement>& v) -> std::int64_t {
    if (v[1].is_zero()) return 0;
    return 1 + static_cast<std::int64_t>((v[0] / v[1]).index());
  };
  for (int t = 0; t < 30; ++t) {
    std::vector<std::size_t> w(1 + rng() % 8);
    for (auto& x : w) x = rng() % mats.size();
    ff::Matrix m = ff::Matrix::identity(g.spec.field.value(), 2);
    for (auto x : w) m = m * mats[x];
    EXPECT_EQ(projective_permutation(m, g.points, index), g.group.evaluate(w));
  }
}

TEST(Suzuki, Generators) {
  const Field f = Field::binary(3);
  EXPECT_EQ(suzuki_s(f, f.zero(), f.zero()), ff::Matrix::identity(f, 4));
  EXPECT_EQ(suzuki_t(f) * suzuki_t(f), ff::Matrix::identity(f, 4));
  EXPECT_EQ(code_of([&] { suzuki_m(f, f.zero()); }), Errc::ZeroLambda);
  EXPECT_EQ(code_of([] { suzuki_k(Field::binary(4)); }), Errc::BadExponent);
  EXPECT_EQ(code_of([] { suzuki_k(Field::binary(1)); }), Errc::BadExponent);
  EXPECT_EQ(code_of([] { suzuki_k(Field::prime(3)); }), Errc::BadExponent);
  for (const auto& l : f.elements()) {
    if (l.is_zero()) continue;
    EXPECT_TRUE(ff::det(suzuki_m(f, l)).is_one());
  }
  for (const auto& a : f.elements())
    for (const auto& b : f.elements()) EXPECT_TRUE(ff::det(suzuki_s(f, a, b)).is_one());
  EXPECT_TRUE(ff::det(suzuki_t(f)).is_one());
}

TEST(Suzuki, TraceOfSTIsSigmaPower) {
  const Field f = Field::binary(3);
  std::set<std::uint64_t> traces;
  for (const auto& b : f.elements()) {
    const auto tr = ff::trace(suzuki_s(f, f.zero(), b) * suzuki_t(f));
    EXPECT_EQ(tr, b.pow(4));
    traces.insert(tr.index());
  }
  EXPECT_EQ(traces.size(), 8u);
}

TEST(Suzuki, OvoidQ8) {
  const auto g = build_suzuki(Field::binary(3));
  EXPECT_EQ(g.group.degree(), 65u);
  EXPECT_EQ(perm::orbit(g.group, 0).points.size(), 65u);
  EXPECT_EQ(bsgs_build(g.group).order(), 29120u);
  EXPECT_EQ(bsgs_build(g.group, {.descending = true}).order(), 29120u);
  EXPECT_EQ(perm::transitivity(g.group), Transitivity::TwoTransitive);
  EXPECT_TRUE(perm::is_perfect(g.group));
  for (const auto& p : g.points) EXPECT_EQ(normalize_projective(p), p);
  EXPECT_EQ(g.point_labels[0], "(0:0:0:1)");
}

TEST(Suzuki, OvoidQ32Order) {
  const auto g = build_suzuki(Field::binary(5));
  EXPECT_EQ(g.group.degree(), 1025u);
  EXPECT_EQ(bsgs_build(g.group).order(), 1025ull * 1024 * 31);
}

TEST(Suzuki, MatrixToPermutationIsHomomorphism) {
  const auto g = build_suzuki(Field::binary(3));
  std::map<std::vector<std::uint64_t>, std::int64_t> lookup;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    std::vector<std::uint64_t> key;
    for (const auto& c : g.points[i]) key.push_back(c.index());
    lookup[key] = static_cast<std::int64_t>(i);
  }
  auto index = [&](const std::vector<ff::FieldElement>& v) -> std::int64_t {
    std::vector<std::uint64_t> key;
    for (const auto& c : normalize_projective(v)) key.push_back(c.index());
    auto it = lookup.find(key);
    return it == lookup.end() ? -1 : it->second;
  };
  std::mt19937 rng(2);
  const auto& mats = g.spec.matrix_generators;
  for (int t = 0; t < 20; ++t) {
    std::vector<std::size_t> w(1 + rng() % 10);
    for (auto& x : w) x = rng() % mats.size();
    ff::Matrix m = ff::Matrix::identity(g.spec.field.value(), 4);
    for (auto x : w) m = m * mats[x];
    EXPECT_EQ(projective_permutation(m, g.points, index), g.group.evaluate(w));
  }
}

TEST(Mathieu, EmbeddedGroupsValidate) {
  struct Case {
    MathieuName name;
    std::size_t degree;
    std::uint64_t order;
  };
  for (const auto& c : {Case{MathieuName::M11On11, 11, 7920}, Case{MathieuName::M11On12, 12, 7920},
                        Case{MathieuName::M12, 12, 95040}, Case{MathieuName::L2_11, 11, 660}}) {
    const auto g = build_mathieu(c.name);
    EXPECT_EQ(g.group.degree(), c.degree);
    EXPECT_EQ(bsgs_build(g.group).order(), c.order);
    EXPECT_EQ(bsgs_build(g.group, {.descending = true}).order(), c.order);
    EXPECT_EQ(perm::transitivity(g.group), Transitivity::TwoTransitive);
    EXPECT_TRUE(perm::is_perfect(g.group));
    EXPECT_FALSE(g.citation.empty());
  }
}

TEST(Mathieu, StabilizerInM12IsM11Sized) {
  const auto g = build_mathieu(MathieuName::M12);
  EXPECT_EQ(bsgs_build(perm::point_stabilizer(g.group, 0)).order(), 7920u);
}

TEST(Classical, Orders) {
  EXPECT_EQ(bsgs_build(build_symmetric_alternating(5, false).group).order(), 120u);
  EXPECT_EQ(bsgs_build(build_symmetric_alternating(5, true).group).order(), 60u);
  const auto a6 = build_symmetric_alternating(6, true);
  EXPECT_EQ(bsgs_build(a6.group).order(), 360u);
  EXPECT_NE(perm::transitivity(a6.group), Transitivity::Intransitive);
  EXPECT_EQ(bsgs_build(build_symmetric_alternating(4, true).group).order(), 12u);
  EXPECT_EQ(bsgs_build(build_cyclic(5).group).order(), 5u);
  EXPECT_EQ(bsgs_build(build_dihedral(5).group).order(), 10u);
  EXPECT_EQ(code_of([] { build_symmetric_alternating(1, false); }), Errc::DegreeTooSmall);
  EXPECT_EQ(code_of([] { build_symmetric_alternating(2, true); }), Errc::DegreeTooSmall);
}

}  // namespace
}  // namespace vsl::groups
