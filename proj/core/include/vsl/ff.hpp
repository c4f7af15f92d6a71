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

// Finite fields F_{p^m} in polynomial basis, and small dense matrices over
// them. Elements carry a handle to their field; arithmetic between elements
// of different fields throws Errc::MixedFields instead of coercing.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace vsl::ff {

using Coeff = std::uint32_t;

/// Validated description of F_{p^m} = F_p[x]/(modulus). The modulus is
/// stored in ascending-degree order (constant term first) and is monic.
struct FieldSpec {
  Coeff characteristic = 2;
  unsigned degree = 1;
  std::vector<Coeff> modulus;

  std::uint64_t size() const;
  bool operator==(const FieldSpec&) const = default;
};

class FieldElement;

/// Shared, immutable handle to a FieldSpec.
class Field {
 public:
  /// Validates and builds a field. Throws NonPrimeCharacteristic,
  /// DegreeMismatch or ReducibleModulus.
  static Field create(Coeff characteristic, unsigned degree, std::vector<Coeff> modulus);
  static Field prime(Coeff p);
  /// F_{2^m} with the fixed default modulus (x^3+x+1 for F_8, x^5+x^2+1 for
  /// F_32, ...). Supported for 1 <= m <= 16.
  static Field binary(unsigned m);
  /// F_{p^m} with the default modulus for p = 2, otherwise the first monic
  /// irreducible polynomial in the canonical enumeration order.
  static Field extension(Coeff p, unsigned m);

  const FieldSpec& spec() const { return *spec_; }
  Coeff characteristic() const { return spec_->characteristic; }
  unsigned degree() const { return spec_->degree; }
  std::uint64_t size() const { return size_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of x in F_p[x]/(modulus).
  FieldElement generator() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(std::vector<Coeff> coeffs) const;
  /// Element with coordinates given by the base-p digits of index
  /// (constant coefficient is the least significant digit).
  FieldElement element(std::uint64_t index) const;
  /// All field elements in canonical (index) order.
  std::vector<FieldElement> elements() const;
  /// x if it is primitive, else the primitive element of smallest index.
  FieldElement primitive_element() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  explicit Field(std::shared_ptr<const FieldSpec> spec);

  std::shared_ptr<const FieldSpec> spec_;
  std::uint64_t size_ = 0;
};

class FieldElement {
 public:
  FieldElement(Field field, std::vector<Coeff> coeffs);

  const Field& field() const { return field_; }
  const std::vector<Coeff>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// Canonical index: sum of coeffs[i] * p^i.
  std::uint64_t index() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  /// Throws InverseOfZero.
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement pow(std::uint64_t e) const;
  /// x -> x^(p^i).
  FieldElement frobenius(unsigned i) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void require_same_field(const FieldElement& o) const;

  Field field_;
  std::vector<Coeff> c_;
};

/// Smallest k >= 1 with a^k = 1. Throws ZeroElement.
std::uint64_t multiplicative_order(const FieldElement& a);
bool is_primitive(const FieldElement& a);

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Every row must have the same length and every entry must belong to field.
  static Matrix from_rows(const Field& field, const std::vector<std::vector<FieldElement>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const FieldElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, FieldElement v);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  std::vector<FieldElement> apply(std::span<const FieldElement> v) const;
  Matrix pow(std::uint64_t e) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

FieldElement trace(const Matrix& m);
FieldElement det(const Matrix& m);
/// Kronecker product; entry (i1*r2 + i2, j1*c2 + j2) = a(i1,j1) * b(i2,j2).
Matrix kron(const Matrix& a, const Matrix& b);
/// Entrywise 2^i-th power. Throws OddCharacteristic for p != 2.
Matrix frobenius_twist(const Matrix& m, unsigned i);
/// Throws ShapeMismatch for singular or non-square input.
Matrix inverse(const Matrix& m);

/// Polynomials over the prime field F_p as ascending coefficient vectors.
/// Used for modulus validation and field search.
namespace primepoly {

using Poly = std::vector<Coeff>;

void trim(Poly& a);
Poly mod(Poly a, const Poly& m, Coeff p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, Coeff p);
Poly gcd(Poly a, Poly b, Coeff p);
/// Rabin's test: x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1 for
/// every prime r | m.
bool is_irreducible_rabin(const Poly& monic, Coeff p);
/// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible_trial(const Poly& monic, Coeff p);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace primepoly

}  // namespace vsl::ff
