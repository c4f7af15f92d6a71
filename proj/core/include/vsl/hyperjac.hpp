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

// Hyperelliptic curves y^2 = f(x) over finite fields of odd characteristic,
// divisor classes in Mumford form with Cantor's group law, and the 2-torsion
// classes e_T attached to even sets T of roots of f.
//
// Every curve is handled through a model y^2 = h(x) with deg h = 2g + 1 and
// one point at infinity. For odd n this is f itself. For even n the root
// alpha = roots[0] is moved to infinity by x -> alpha + 1/z, giving
// h(z) = z^n f(alpha + 1/z) of degree n - 1; root beta != alpha then sits at
// z = 1 / (beta - alpha).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vsl/ff.hpp"
#include "vsl/permgrp.hpp"

namespace vsl::hyperjac {

/// Dense polynomial over a finite field, coefficients in ascending order
/// with no trailing zeros.
class Poly {
 public:
  explicit Poly(ff::Field field);
  Poly(ff::Field field, std::vector<ff::FieldElement> coeffs);
  static Poly constant(const ff::FieldElement& c);
  /// x - a.
  static Poly linear(const ff::FieldElement& a);
  static Poly x(const ff::Field& field);

  const ff::Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const std::vector<ff::FieldElement>& coeffs() const { return c_; }
  ff::FieldElement coeff(std::size_t i) const;
  /// Throws ZeroElement for the zero polynomial.
  ff::FieldElement lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scale(const ff::FieldElement& c) const;
  /// Quotient and remainder. Throws InverseOfZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool operator==(const Poly& o) const;

  Poly monic() const;
  Poly derivative() const;
  ff::FieldElement eval(const ff::FieldElement& x) const;
  Poly pow_mod(std::uint64_t e, const Poly& m) const;
  /// Coefficient-wise x -> x^(p^i).
  Poly frobenius(unsigned i) const;

  /// Coefficient indices, ascending.
  std::vector<std::uint64_t> coeff_indices() const;
  std::string to_string() const;

 private:
  void trim();

  ff::Field field_;
  std::vector<ff::FieldElement> c_;
};

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g;
  Poly s;
  Poly t;
};

/// g = s a + t b with g monic.
Xgcd xgcd(const Poly& a, const Poly& b);

/// Degrees of the irreducible factors of a squarefree polynomial, by
/// distinct-degree factorization, ascending.
std::vector<unsigned> factor_degrees(const Poly& f);

/// All roots of f in its field, sorted by element index. f must split into
/// distinct linear factors. Uses equal-degree splitting with shifts x + a
/// taken in index order, so the result is deterministic.
std::vector<ff::FieldElement> split_roots(const Poly& f);

enum class Model { Odd, EvenRootAtInfinity };

std::string to_string(Model m);

struct Curve {
  ff::Field base_field;
  /// f over the base field, ascending.
  std::vector<ff::FieldElement> f_coeffs;
  std::size_t n = 0;
  std::size_t genus = 0;
  /// Degree of the working field over the base field.
  unsigned splitting_degree = 1;
  ff::Field field;
  /// f over the working field.
  Poly f;
  /// The n roots in the working field, sorted by index.
  std::vector<ff::FieldElement> roots;
  Model model = Model::Odd;
  /// Odd-degree model polynomial h over the working field.
  Poly h;
  /// x-coordinate in the model of each root; empty for the root at infinity.
  std::vector<std::optional<ff::FieldElement>> model_x;
};

/// f_coeffs ascending over base. Throws EvenCharacteristic, DegreeTooSmall
/// (n < 5), NotSquarefree, InvalidInput (zero leading coefficient),
/// Unsupported (splitting degree above 12, or a non-prime base field that
/// does not split f).
Curve curve_create(const ff::Field& base, std::vector<ff::FieldElement> f_coeffs);
/// Integer coefficients in descending order over F_p.
Curve curve_create(ff::Coeff p, const std::vector<std::int64_t>& descending);

/// Reduced divisor class: u monic, deg v < deg u, u | v^2 - h.
struct Mumford {
  Poly u;
  Poly v;

  bool is_zero() const { return u.is_one() && v.is_zero(); }
  bool operator==(const Mumford& o) const { return u == o.u && v == o.v; }
};

Mumford zero_divisor(const Curve& c);
/// Throws InvalidMumford.
void validate(const Curve& c, const Mumford& d);
/// Cantor composition and reduction. Throws InvalidMumford.
Mumford cantor_add(const Curve& c, const Mumford& a, const Mumford& b);
Mumford negate(const Curve& c, const Mumford& d);

struct TorsionClass {
  /// Sorted root indices.
  std::vector<std::size_t> subset;
  Mumford reduced;
};

/// cl(e_T) for an even set T of root indices. Throws OddCardinality,
/// RootNotOnCurve (index out of range or repeated).
TorsionClass two_torsion_class(const Curve& c, const std::vector<std::size_t>& subset);

struct VerifyOptions {
  /// Pairs (T1, T2) checked exhaustively up to this many, sampled above.
  std::uint64_t pair_cap = std::uint64_t{1} << 16;
  std::uint64_t seed = 1;
};

struct TwoTorsionReport {
  std::size_t n = 0;
  std::size_t genus = 0;
  unsigned splitting_degree = 1;
  Model model = Model::Odd;
  std::uint64_t subsets = 0;
  std::uint64_t classes = 0;
  std::uint64_t expected_classes = 0;
  std::uint64_t pairs_checked = 0;
  bool pairs_exhaustive = true;
  bool symdiff_law = false;
  bool doubling_zero = false;
  bool distinctness = false;
  bool class_count = false;
  /// Even n only: cl(e_B) = 0.
  std::optional<bool> full_set_zero;
};

/// Runs checks (a)-(e) over all even subsets (n <= 13). Throws
/// VerificationFailed naming the offending subsets, Unsupported for n > 13.
TwoTorsionReport verify_symdiff_isomorphism(const Curve& c, const VerifyOptions& options = {});

struct FrobeniusReport {
  /// roots[i]^p = roots[root_permutation[i]].
  std::vector<perm::Point> root_permutation;
  std::uint64_t classes_checked = 0;
  /// cl(e_T)^phi = cl(e_phi(T)) for every even T.
  bool equivariant = false;
  /// The induced action on classes equals the Q_B matrix of the root
  /// permutation under T -> coordinates of T.
  bool matches_qb = false;
};

/// Throws GroundFieldNotPrime; Unsupported for even n when roots[0] is not
/// rational (the model then depends on a non-rational point).
FrobeniusReport frobenius_equivariance(const Curve& c);

}  // namespace vsl::hyperjac
