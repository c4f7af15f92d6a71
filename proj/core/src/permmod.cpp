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

#include "vsl/permmod.hpp"

#include <algorithm>

#include "vsl/error.hpp"

namespace vsl::permmod {

using f2::BitMatrix;
using f2::BitVec;
using perm::Permutation;
using perm::PermGroup;
using perm::Point;

F2Module::F2Module(std::shared_ptr<const PermGroup> group, std::vector<BitMatrix> gen_matrices, std::string label,
                   ElementMatrix element_matrix)
    : group_(std::move(group)),
      gens_(std::move(gen_matrices)),
      label_(std::move(label)),
      element_matrix_(std::move(element_matrix)) {
  if (gens_.size() != group_->generators().size()) {
    throw Error(Errc::ShapeMismatch, "one matrix per group generator is required");
  }
  dim_ = gens_.empty() ? 0 : gens_[0].rows();
  for (const auto& m : gens_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw Error(Errc::ShapeMismatch, "generator matrices must be N x N");
    if (!m.is_invertible()) throw Error(Errc::SingularConjugator, "generator matrix is singular");
  }
}

BitMatrix F2Module::matrix_of_word(const std::vector<std::size_t>& word) const {
  BitMatrix r = BitMatrix::identity(dim_);
  for (auto i : word) {
    if (i >= gens_.size()) throw Error(Errc::InvalidInput, "word letter out of range");
    r = r * gens_[i];
  }
  return r;
}

ModuleBasisMap qb_basis(std::size_t n) {
  if (n < 3) throw Error(Errc::DegreeTooSmall, "Q_B needs at least 3 points");
  ModuleBasisMap m;
  m.n = n;
  m.parity = n % 2 ? Parity::Odd : Parity::Even;
  m.dim = n % 2 ? n - 1 : n - 2;
  return m;
}

namespace {

// Adds e_b to v (e_0 = 0; for even n, e_{n-1} is the all-ones vector).
void add_basis_vector(BitVec& v, std::size_t n, Point b) {
  if (b == 0) return;
  if (n % 2 == 0 && b == n - 1) {
    for (std::size_t i = 0; i < n - 2; ++i) v.flip(i);
    return;
  }
  v.flip(b - 1);
}

}  // namespace

BitMatrix qb_matrix(const Permutation& g) {
  const std::size_t n = g.degree();
  const std::size_t dim = qb_basis(n).dim;
  BitMatrix m(dim, dim);
  for (std::size_t i = 1; i <= dim; ++i) {
    BitVec col(dim);
    add_basis_vector(col, n, g(0));
    add_basis_vector(col, n, g(static_cast<Point>(i)));
    for (std::size_t r = 0; r < dim; ++r) {
      if (col.get(r)) m.set(r, i - 1);
    }
  }
  return m;
}

std::pair<F2Module, ModuleBasisMap> build_qb(const PermGroup& group, std::string label) {
  const ModuleBasisMap basis = qb_basis(group.degree());
  std::vector<BitMatrix> mats;
  for (const auto& g : group.generators()) mats.push_back(qb_matrix(g));
  auto shared = std::make_shared<const PermGroup>(group);
  return {F2Module(std::move(shared), std::move(mats), std::move(label), qb_matrix), basis};
}

BitVec subset_to_vector(const std::vector<Point>& subset, std::size_t n) {
  const std::size_t dim = qb_basis(n).dim;
  if (subset.size() % 2) throw Error(Errc::OddCardinality, "subset must have even cardinality");
  BitVec v(dim);
  std::vector<bool> seen(n, false);
  for (auto b : subset) {
    if (b >= n) throw Error(Errc::PointOutOfRange, "subset point outside B");
    if (seen[b]) throw Error(Errc::InvalidInput, "subset lists a point twice");
    seen[b] = true;
    add_basis_vector(v, n, b);
  }
  return v;
}

SubsetClass vector_to_subset(const BitVec& v, std::size_t n) {
  const std::size_t dim = qb_basis(n).dim;
  if (v.size() != dim) throw Error(Errc::LengthMismatch, "vector length differs from dim Q_B");
  std::vector<bool> in(n, false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    if (v.get(i)) {
      in[i + 1] = true;
      ++count;
    }
  }
  if (count % 2) in[0] = true;
  SubsetClass out;
  if (n % 2 == 0 && in[0]) {
    for (auto&& x : in) x = !x;
  }
  for (Point b = 0; b < n; ++b) {
    if (in[b]) {
      out.representative.push_back(b);
    } else if (n % 2 == 0) {
      out.complement.push_back(b);
    }
  }
  return out;
}

std::int64_t brauer_character_qb(const Permutation& g) {
  const auto stats = perm::element_stats(g);
  if (!stats.two_regular) throw Error(Errc::NotTwoRegular, "element of even order " + std::to_string(stats.order));
  const auto fix = static_cast<std::int64_t>(stats.fixed_points);
  return g.degree() % 2 ? fix - 1 : fix - 2;
}

Permutation restrict_to_complement(const Permutation& g, Point b) {
  if (g(b) != b) throw Error(Errc::InvalidInput, "element does not fix the removed point");
  std::vector<Point> images;
  for (Point x = 0; x < g.degree(); ++x) {
    if (x == b) continue;
    const Point y = g(x);
    images.push_back(y > b ? y - 1 : y);
  }
  return Permutation(std::move(images));
}

RestrictionIso odd_even_restriction_iso(const PermGroup& group, Point b) {
  const std::size_t n = group.degree();
  if (n % 2) throw Error(Errc::OddDegree, "restriction isomorphism needs an even number of points");
  if (b >= n) throw Error(Errc::PointOutOfRange, "removed point outside B");
  const std::size_t dim = qb_basis(n).dim;

  RestrictionIso out;
  out.point = b;
  out.dim = dim;
  for (Point x = 0; x < n; ++x) {
    if (x != b) out.points.push_back(x);
  }
  // Column j - 1 is chi_{b'_0} + chi_{b'_j} written in the basis of Q_B.
  out.intertwiner = BitMatrix(dim, dim);
  for (std::size_t j = 1; j <= dim; ++j) {
    BitVec col(dim);
    add_basis_vector(col, n, out.points[0]);
    add_basis_vector(col, n, out.points[j]);
    for (std::size_t r = 0; r < dim; ++r) {
      if (col.get(r)) out.intertwiner.set(r, j - 1);
    }
  }
  if (!out.intertwiner.is_invertible()) throw Error(Errc::IntertwinerCheckFailed, "intertwiner is singular");

  out.stabilizer_generators = perm::point_stabilizer(group, b).generators();
  for (const auto& s : out.stabilizer_generators) {
    const BitMatrix big = qb_matrix(s);
    const BitMatrix small = qb_matrix(restrict_to_complement(s, b));
    if (!(big * out.intertwiner == out.intertwiner * small)) {
      throw Error(Errc::IntertwinerCheckFailed, "intertwiner fails for " + s.to_cycle_string());
    }
  }
  return out;
}

F2Module tensor_product(const F2Module& a, const F2Module& b) {
  if (a.group().generators() != b.group().generators()) {
    throw Error(Errc::InvalidInput, "tensor factors must share the group generators");
  }
  std::vector<BitMatrix> mats;
  for (std::size_t i = 0; i < a.gen_matrices().size(); ++i) mats.push_back(f2::kron(a.gen_matrices()[i], b.gen_matrices()[i]));
  auto left = std::make_shared<const F2Module>(a);
  auto right = std::make_shared<const F2Module>(b);
  F2Module out(a.group_ptr(), std::move(mats), a.label() + " (x) " + b.label(),
               [left, right](const Permutation& g) { return f2::kron(left->matrix_of(g), right->matrix_of(g)); });
  out.left_ = left;
  out.right_ = right;
  return out;
}

}  // namespace vsl::permmod
