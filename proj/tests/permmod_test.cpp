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

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "vsl/error.hpp"
#include "vsl/groups.hpp"
#include "vsl/permmod.hpp"

namespace vsl::permmod {
namespace {

using f2::BitMatrix;
using f2::BitVec;
using perm::Permutation;
using perm::Point;

// Independent model: work in F_2^B with explicit subsets, then read off
// coordinates by solving against the images of the basis vectors.
std::vector<bool> chi_sum(const std::vector<Point>& t, std::size_t n) {
  std::vector<bool> v(n, false);
  for (auto b : t) v[b] = !v[b];
  return v;
}

// Coordinates of an even-weight vector w of F_2^B in Q_B. For odd n,
// coordinate i - 1 is w_i. For even n, first move to the representative
// with w_{n-1} = 0 by adding all-ones when needed.
BitVec coords(std::vector<bool> w) {
  const std::size_t n = w.size();
  if (n % 2 == 0 && w[n - 1]) {
    for (auto&& x : w) x = !x;
  }
  const std::size_t dim = n % 2 ? n - 1 : n - 2;
  BitVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) v.set(i, w[i + 1]);
  return v;
}

BitMatrix oracle_matrix(const Permutation& g) {
  const std::size_t n = g.degree();
  const std::size_t dim = n % 2 ? n - 1 : n - 2;
  BitMatrix m(dim, dim);
  for (std::size_t i = 1; i <= dim; ++i) {
    const BitVec col = coords(chi_sum({g(0), g(static_cast<Point>(i))}, n));
    for (std::size_t r = 0; r < dim; ++r) m.set(r, i - 1, col.get(r));
  }
  return m;
}

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

TEST(QbMatrix, MatchesSubsetModel) {
  std::mt19937 rng(1);
  for (std::size_t n : {3u, 4u, 5u, 6u, 9u, 12u, 65u}) {
    for (int t = 0; t < 20; ++t) {
      const auto g = random_perm(n, rng);
      EXPECT_EQ(qb_matrix(g), oracle_matrix(g)) << n;
    }
  }
}

TEST(QbMatrix, HomomorphismAndFaithful) {
  std::mt19937 rng(2);
  for (std::size_t n : {5u, 6u, 12u}) {
    for (int t = 0; t < 30; ++t) {
      const auto g = random_perm(n, rng), h = random_perm(n, rng);
      EXPECT_EQ(qb_matrix(g * h), qb_matrix(g) * qb_matrix(h));
      EXPECT_EQ(qb_matrix(g).is_identity(), g.is_identity());
    }
  }
}

TEST(BuildQb, Dimensions) {
  auto s5 = groups::build_symmetric_alternating(5, false);
  EXPECT_EQ(build_qb(s5.group).first.dim(), 4u);
  auto sz = groups::build_suzuki(ff::Field::binary(3));
  auto [mod, basis] = build_qb(sz.group);
  EXPECT_EQ(mod.dim(), 64u);
  EXPECT_EQ(basis.parity, Parity::Odd);
  auto m12 = groups::build_mathieu(groups::MathieuName::M12);
  EXPECT_EQ(build_qb(m12.group).first.dim(), 10u);
  EXPECT_EQ(build_qb(m12.group).second.parity, Parity::Even);
  EXPECT_THROW(qb_basis(2), Error);
}

TEST(BuildQb, WordsMatchElementMatrices) {
  std::mt19937 rng(3);
  for (const auto& g : {groups::build_mathieu(groups::MathieuName::M12), groups::build_sl2(ff::Field::binary(3))}) {
    const auto mod = build_qb(g.group).first;
    for (const auto& m : mod.gen_matrices()) EXPECT_TRUE(m.is_invertible());
    for (int t = 0; t < 100; ++t) {
      std::vector<std::size_t> w(1 + rng() % 12);
      for (auto& x : w) x = rng() % g.group.generators().size();
      EXPECT_EQ(mod.matrix_of_word(w), mod.matrix_of(g.group.evaluate(w)));
    }
  }
}

TEST(SubsetVector, Examples) {
  EXPECT_TRUE(subset_to_vector({}, 5).is_zero());
  EXPECT_EQ(subset_to_vector({0, 1}, 5) ^ subset_to_vector({1, 2}, 5), subset_to_vector({0, 2}, 5));
  EXPECT_EQ(subset_to_vector({0, 1}, 6), subset_to_vector({2, 3, 4, 5}, 6));
  try {
    subset_to_vector({1}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OddCardinality);
  }
}

std::vector<Point> subset_of(std::uint32_t mask, std::size_t n) {
  std::vector<Point> t;
  for (Point b = 0; b < n; ++b) {
    if ((mask >> b) & 1u) t.push_back(b);
  }
  return t;
}

TEST(SubsetVector, ExhaustiveSymmetricDifference) {
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<std::uint32_t> even;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (std::popcount(m) % 2 == 0) even.push_back(m);
    }
    std::set<std::vector<f2::Word>> distinct;
    for (auto a : even) {
      const BitVec va = subset_to_vector(subset_of(a, n), n);
      distinct.insert({va.words().begin(), va.words().end()});
      const auto back = vector_to_subset(va, n);
      const std::uint32_t full = (1u << n) - 1;
      if (n % 2) {
        EXPECT_EQ(back.representative, subset_of(a, n));
      } else {
        const std::uint32_t rep = (a & 1u) ? (full ^ a) : a;
        EXPECT_EQ(back.representative, subset_of(rep, n));
        EXPECT_EQ(back.complement, subset_of(full ^ rep, n));
      }
      for (auto b : even) {
        EXPECT_EQ(va ^ subset_to_vector(subset_of(b, n), n), subset_to_vector(subset_of(a ^ b, n), n));
      }
    }
    EXPECT_EQ(distinct.size(), std::size_t{1} << qb_basis(n).dim);
  }
}

TEST(BrauerCharacter, Values) {
  EXPECT_EQ(brauer_character_qb(Permutation(9)), 8);
  EXPECT_EQ(brauer_character_qb(Permutation(12)), 10);
  const auto sl = groups::build_sl2(ff::Field::binary(3));
  const perm::Bsgs b = perm::bsgs_build(sl.group);
  bool saw_seven = false;
  b.for_each_element([&](const Permutation& g) {
    if (g.order() == 7) {
      EXPECT_EQ(g.fixed_point_count(), 2u);
      EXPECT_EQ(brauer_character_qb(g), 1);
      saw_seven = true;
    }
    return true;
  });
  EXPECT_TRUE(saw_seven);
  EXPECT_THROW(brauer_character_qb(Permutation::from_cycles(5, {{0, 1}})), Error);
}

// Brauer character equals the trace over F_2 lifted: for odd-order g the
// mod-2 reduction of fix(g) - c must be the F_2 trace of the matrix.
TEST(BrauerCharacter, ParityMatchesMatrixTrace) {
  std::mt19937 rng(4);
  for (std::size_t n : {7u, 9u, 10u, 12u}) {
    for (int t = 0; t < 200; ++t) {
      const auto g = random_perm(n, rng);
      if (g.order() % 2 == 0) continue;
      const BitMatrix m = qb_matrix(g);
      int tr = 0;
      for (std::size_t i = 0; i < m.rows(); ++i) tr ^= m.get(i, i);
      EXPECT_EQ(((brauer_character_qb(g) % 2) + 2) % 2, tr);
    }
  }
}

TEST(RestrictionIso, M12PointStabilizer) {
  const auto m12 = groups::build_mathieu(groups::MathieuName::M12);
  const auto iso = odd_even_restriction_iso(m12.group, 0);
  EXPECT_EQ(iso.dim, 10u);
  EXPECT_TRUE(iso.intertwiner.is_invertible());
  EXPECT_EQ(perm::bsgs_build(perm::PermGroup(12, iso.stabilizer_generators)).order(), 7920u);
  for (const auto& s : iso.stabilizer_generators) {
    EXPECT_EQ(qb_matrix(s) * iso.intertwiner, iso.intertwiner * qb_matrix(restrict_to_complement(s, 0)));
  }
}

TEST(RestrictionIso, S6AndOtherPoints) {
  const auto s6 = groups::build_symmetric_alternating(6, false);
  for (Point b = 0; b < 6; ++b) {
    const auto iso = odd_even_restriction_iso(s6.group, b);
    EXPECT_EQ(iso.dim, 4u);
    EXPECT_EQ(qb_basis(5).dim, iso.dim);
  }
  try {
    odd_even_restriction_iso(groups::build_symmetric_alternating(5, false).group, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OddDegree);
  }
}

TEST(TensorProduct, DiagonalAction) {
  const auto s5 = groups::build_symmetric_alternating(5, false);
  const auto v = build_qb(s5.group).first;
  const auto t = tensor_product(v, v);
  EXPECT_EQ(t.dim(), 16u);
  ASSERT_TRUE(t.left_factor());
  const auto g = s5.group.evaluate({0, 1, 1});
  EXPECT_EQ(t.matrix_of(g), f2::kron(qb_matrix(g), qb_matrix(g)));
  EXPECT_EQ(t.matrix_of_word({0, 1, 1}), t.matrix_of(g));
}

}  // namespace
}  // namespace vsl::permmod
