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

// The heart Q_B of the F_2 permutation module of a permutation group.
//
// For odd n = #B, Q_B is the even-weight hyperplane of F_2^B with basis
// e_i = chi_0 + chi_i (i = 1..n-1). For even n it is that hyperplane modulo
// the all-ones vector, with basis e_1..e_{n-2}; there e_{n-1} equals the sum
// of the other basis vectors. In both cases e_0 := 0, so a permutation g
// sends e_i to e_{g(0)} + e_{g(i)}.

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vsl/f2linalg.hpp"
#include "vsl/permgrp.hpp"

namespace vsl::permmod {

enum class Parity { Odd, Even };

struct ModuleBasisMap {
  std::size_t n = 0;
  Parity parity = Parity::Odd;
  std::size_t dim = 0;
  std::string convention = "chi_0+chi_i";
};

/// A representation of a permutation group on F_2^N given by one matrix per
/// group generator, plus a rule producing the matrix of any group element.
class F2Module {
 public:
  using ElementMatrix = std::function<f2::BitMatrix(const perm::Permutation&)>;

  /// Throws ShapeMismatch if a matrix is not N x N or the counts differ,
  /// SingularConjugator if a generator matrix is singular.
  F2Module(std::shared_ptr<const perm::PermGroup> group, std::vector<f2::BitMatrix> gen_matrices, std::string label,
           ElementMatrix element_matrix);

  std::size_t dim() const { return dim_; }
  const perm::PermGroup& group() const { return *group_; }
  const std::shared_ptr<const perm::PermGroup>& group_ptr() const { return group_; }
  const std::vector<f2::BitMatrix>& gen_matrices() const { return gens_; }
  const std::string& label() const { return label_; }

  /// Matrix of an arbitrary group element.
  f2::BitMatrix matrix_of(const perm::Permutation& g) const { return element_matrix_(g); }
  /// Product of generator matrices along a word (leftmost applied last).
  f2::BitMatrix matrix_of_word(const std::vector<std::size_t>& word) const;

  /// Set for modules built by tensor_product.
  const std::shared_ptr<const F2Module>& left_factor() const { return left_; }
  const std::shared_ptr<const F2Module>& right_factor() const { return right_; }

 private:
  friend F2Module tensor_product(const F2Module& a, const F2Module& b);

  std::shared_ptr<const perm::PermGroup> group_;
  std::size_t dim_ = 0;
  std::vector<f2::BitMatrix> gens_;
  std::string label_;
  ElementMatrix element_matrix_;
  std::shared_ptr<const F2Module> left_;
  std::shared_ptr<const F2Module> right_;
};

ModuleBasisMap qb_basis(std::size_t n);

/// Matrix of g on Q_B. Throws DegreeTooSmall for n < 3.
f2::BitMatrix qb_matrix(const perm::Permutation& g);

/// Throws DegreeTooSmall for n < 3.
std::pair<F2Module, ModuleBasisMap> build_qb(const perm::PermGroup& group, std::string label = "Q_B");

/// Coordinates of the even subset T (points < n). Throws OddCardinality,
/// PointOutOfRange.
f2::BitVec subset_to_vector(const std::vector<perm::Point>& subset, std::size_t n);

struct SubsetClass {
  /// Sorted representative; for even n the member of {T, B \ T} without 0.
  std::vector<perm::Point> representative;
  /// B \ representative for even n, empty for odd n.
  std::vector<perm::Point> complement;
};

/// Inverse of subset_to_vector (up to complement for even n).
SubsetClass vector_to_subset(const f2::BitVec& v, std::size_t n);

/// Brauer character of Q_B at a 2-regular element: fix(g) - 1 for odd n,
/// fix(g) - 2 for even n. Throws NotTwoRegular.
std::int64_t brauer_character_qb(const perm::Permutation& g);

struct RestrictionIso {
  /// Removed point b.
  perm::Point point = 0;
  /// B' = B \ {b} in increasing order; local index j is points[j].
  std::vector<perm::Point> points;
  /// Generators of G_b used in the check.
  std::vector<perm::Permutation> stabilizer_generators;
  /// Columns are the images in Q_B of the basis of Q_{B'}.
  f2::BitMatrix intertwiner;
  std::size_t dim = 0;
};

/// Restriction of g in G_b to B', relabeled to 0..n-2.
perm::Permutation restrict_to_complement(const perm::Permutation& g, perm::Point b);

/// Builds Q_{B'} -> Q_B for the stabilizer G_b and checks that it is
/// invertible and intertwines every stabilizer generator. Throws OddDegree,
/// IntertwinerCheckFailed.
RestrictionIso odd_even_restriction_iso(const perm::PermGroup& group, perm::Point b);

/// Diagonal action on the Kronecker product A (x) B; both modules must act
/// through the same group generators.
F2Module tensor_product(const F2Module& a, const F2Module& b);

}  // namespace vsl::permmod
