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

// Constructors for the concrete permutation groups used by the checks:
// SL_2(q) on the projective line, Sz(q) on its ovoid, the Mathieu groups and
// L_2(11) from embedded generators, and the small classical families.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsl/ff.hpp"
#include "vsl/permgrp.hpp"

namespace vsl::groups {

enum class Family {
  SL2,
  Suzuki,
  Mathieu11,
  Mathieu11On12,
  Mathieu12,
  L2_11,
  Symmetric,
  Alternating,
  Cyclic,
  Dihedral,
};

std::string_view to_string(Family f);

struct GroupSpec {
  Family family;
  /// Field for the matrix families.
  std::optional<ff::Field> field;
  /// n for the classical families.
  std::size_t n = 0;
  /// Matrix generators whose projective action gives the permutations.
  std::vector<ff::Matrix> matrix_generators;
  std::size_t action_degree = 0;
};

struct BuiltGroup {
  GroupSpec spec;
  perm::PermGroup group;
  std::string label;
  /// Human-readable name of every point, in point-index order.
  std::vector<std::string> point_labels;
  /// Projective coordinates of every point for the matrix families.
  std::vector<std::vector<ff::FieldElement>> points;
  std::optional<std::uint64_t> claimed_order;
  std::string citation;
};

/// SL_2(F_q) = L_2(q) on P^1(F_q), q = 2^m >= 4. Point 0 is infinity and
/// point 1 + i is the field element of index i. Generators are the images
/// of [[1,1],[0,1]], [[0,1],[1,0]] and diag(l, l^-1) for the canonical
/// primitive element l, acting by z -> (az+b)/(cz+d).
/// Throws OddCharacteristic, FieldTooSmall.
BuiltGroup build_sl2(const ff::Field& field);

/// k with q = 2^(2k+1), k >= 1. Throws BadExponent.
unsigned suzuki_k(const ff::Field& field);

ff::Matrix suzuki_s(const ff::Field& field, const ff::FieldElement& a, const ff::FieldElement& b);
/// diag(l^(1+2^k), l^(2^k), l^(-2^k), l^(-(1+2^k))). Throws ZeroLambda.
ff::Matrix suzuki_m(const ff::Field& field, const ff::FieldElement& lambda);
ff::Matrix suzuki_t(const ff::Field& field);

struct SuzukiGenerators {
  ff::Matrix s;
  ff::Matrix m;
  ff::Matrix t;
};

/// Throws BadExponent, ZeroLambda.
SuzukiGenerators suzuki_generators(const ff::Field& field, const ff::FieldElement& a, const ff::FieldElement& b,
                                   const ff::FieldElement& lambda);

/// Sz(q) on the orbit of (1:0:0:0) under S(1,0), S(0,1), M(l0), T, with l0
/// the canonical primitive element. Points are normalized so the first
/// nonzero coordinate is 1 and ordered by their tuple of element indices.
BuiltGroup build_suzuki(const ff::Field& field);

enum class MathieuName { M11On11, M11On12, M12, L2_11 };

std::string_view to_string(MathieuName name);

/// Loads the embedded generators and validates order, 2-transitivity and
/// perfectness. Throws ValidationFailed.
BuiltGroup build_mathieu(MathieuName name);

/// S_n from (0 1), (0 1 ... n-1); A_n from (0 1 2) and an (n or n-1)-cycle
/// of even sign. Throws DegreeTooSmall.
BuiltGroup build_symmetric_alternating(std::size_t n, bool alt);
/// Throws DegreeTooSmall for n < 2.
BuiltGroup build_cyclic(std::size_t n);
/// Dihedral group of order 2n on n points. Throws DegreeTooSmall for n < 3.
BuiltGroup build_dihedral(std::size_t n);

/// Permutation of an indexed point set induced by the projective action
/// v -> M v. index maps any nonzero vector to the index of its projective
/// point, or -1 when the point is not in the set.
perm::Permutation projective_permutation(const ff::Matrix& m,
                                         const std::vector<std::vector<ff::FieldElement>>& points,
                                         const std::function<std::int64_t(const std::vector<ff::FieldElement>&)>& index);

/// Scales v so its first nonzero coordinate is 1.
std::vector<ff::FieldElement> normalize_projective(std::vector<ff::FieldElement> v);

}  // namespace vsl::groups
