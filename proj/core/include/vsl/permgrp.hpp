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

// Permutation groups on {0, ..., n-1}: orbits, a deterministic Schreier-Sims
// base and strong generating set, and derived properties.
//
// Composition is functional: (g * h)(x) = g(h(x)). With this convention the
// map g -> (e_b -> e_{g(b)}) into column-acting matrices is a homomorphism.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vsl::perm {

using Point = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  /// Identity on n points.
  explicit Permutation(std::size_t n);
  /// Throws InvalidInput unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);
  /// Cycles over {0..n-1}; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation pow(std::int64_t e) const;
  std::uint64_t order() const;
  std::size_t fixed_point_count() const;

  auto operator<=>(const Permutation&) const = default;

  std::string to_cycle_string() const;

 private:
  std::vector<Point> images_;
};

struct ElementStats {
  std::size_t fixed_points = 0;
  std::uint64_t order = 1;
  bool two_regular = true;
};

ElementStats element_stats(const Permutation& g);

class PermGroup {
 public:
  /// Throws InvalidInput for an empty list or mixed degrees.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// Evaluates a word of generator indices, leftmost letter applied last.
  Permutation evaluate(const std::vector<std::size_t>& word) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
};

struct Orbit {
  Point root = 0;
  /// Points in BFS discovery order.
  std::vector<Point> points;
  /// witness[p] maps root to p: a word of generator indices (evaluate()).
  /// Empty optional for points outside the orbit.
  std::vector<std::optional<std::vector<std::size_t>>> witness;

  bool contains(Point p) const { return p < witness.size() && witness[p].has_value(); }
};

/// Throws PointOutOfRange.
Orbit orbit(const PermGroup& g, Point p);

/// Orbit partition of {0..n-1}.
std::vector<std::vector<Point>> orbits(const PermGroup& g);

struct BsgsOptions {
  /// Points forced to the front of the base, in this order.
  std::vector<Point> base_prefix;
  /// New base points are the largest moved point instead of the smallest.
  bool descending = false;
};

class Bsgs {
 public:
  struct Level {
    Point base_point = 0;
    /// Indices into strong_generators() fixing every earlier base point.
    std::vector<std::size_t> gens;
    /// Fundamental orbit in discovery order.
    std::vector<Point> orbit;
    /// transversal[p]: element mapping base_point to p, when p is in orbit.
    std::vector<std::optional<Permutation>> transversal;
    /// Schreier vector: strong generator index that first reached p
    /// (-1 for the base point, -2 outside the orbit).
    std::vector<std::int64_t> schreier;
  };

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  /// Residue after stripping through all levels, and the level at which it
  /// stopped (levels().size() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;
  /// Strong generator indices whose product maps the base point of level to p.
  std::vector<std::size_t> witness_word(std::size_t level, Point p) const;
  /// Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

  /// Uniformly random element from the transversal decomposition.
  Permutation random_element(std::mt19937_64& rng) const;
  /// Visits every element once as u_0 * u_1 * ... * u_{k-1}; stops early
  /// when visit returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

 private:
  friend Bsgs bsgs_build(const PermGroup& group, const BsgsOptions& options);

  void rebuild_level(std::size_t i);

  std::size_t degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

/// Deterministic Schreier-Sims.
Bsgs bsgs_build(const PermGroup& group, const BsgsOptions& options = {});

std::uint64_t group_order(const Bsgs& b);
bool contains(const Bsgs& b, const Permutation& g);

enum class Transitivity { Intransitive, Transitive, TwoTransitive };

std::string_view to_string(Transitivity t);
Transitivity transitivity(const PermGroup& g);

/// Generators of G_p obtained from a BSGS with base starting at p.
PermGroup point_stabilizer(const PermGroup& g, Point p);

/// Normal closure of the generator commutators, i.e. [G, G].
PermGroup derived_subgroup(const PermGroup& g);
/// |G / [G, G]|.
std::uint64_t abelianization_order(const PermGroup& g);
bool is_perfect(const PermGroup& g);

}  // namespace vsl::perm
