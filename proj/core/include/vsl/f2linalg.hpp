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

// Dense linear algebra over F_2 with 64-bit packed rows.
//
// Bit j of a row lives in word j / 64 at bit position j % 64. Padding bits
// past the logical length are kept zero by every operation, so words can be
// compared and XOR-ed directly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vsl::f2 {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_(words_for(nbits), 0) {}

  std::size_t size() const { return nbits_; }
  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const Word mask = Word{1} << (i % kWordBits);
    if (v) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  BitVec& operator^=(const BitVec& o);
  BitVec operator^(const BitVec& o) const {
    BitVec r = *this;
    r ^= o;
    return r;
  }
  bool operator==(const BitVec& o) const = default;

  bool is_zero() const;
  std::size_t popcount() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t lowest_set() const;

 private:
  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);
  /// Inverse of flatten(): rows*cols bits in row-major order.
  static BitMatrix unflatten(const BitVec& v, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const { return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v = true);
  void flip(std::size_t r, std::size_t c) { data_[r * wpr_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }

  BitMatrix operator+(const BitMatrix& o) const;
  BitMatrix operator*(const BitMatrix& o) const;
  bool operator==(const BitMatrix& o) const = default;

  BitMatrix transpose() const;
  /// Row-major flattening into a rows*cols bit vector.
  BitVec flatten() const;
  BitVec row_vector(std::size_t r) const;
  bool is_zero() const;
  bool is_identity() const;

  std::size_t rank() const;
  bool is_invertible() const;
  /// Throws SingularConjugator when singular, ShapeMismatch when not square.
  BitMatrix inverse() const;
  BitVec apply(const BitVec& v) const;

  /// One hex string per row. Character k encodes columns 4k..4k+3 with
  /// column 4k in the least significant bit of the nibble.
  std::vector<std::string> to_hex_rows() const;
  static BitMatrix from_hex_rows(std::size_t rows, std::size_t cols, const std::vector<std::string>& hex);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> data_;
};

/// Kronecker product with index convention (i1 * b.rows() + i2).
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

/// Reduced row-echelon basis of a subspace of F_2^ambient_dim.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  /// Sorted pivot columns; pivots()[i] is the pivot of rows()[i].
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<BitVec>& rows() const { return rows_; }
  bool full() const { return rows_.size() == ambient_; }

  /// Adds v to the span. Returns true iff v was independent of the prior
  /// span. Throws LengthMismatch.
  bool insert(BitVec v);
  /// Residue of v after elimination against the basis (zero iff v is in span).
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

 private:
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVec> rows_;
};

/// Dimension of {X : g X = X g for all gens}.
std::size_t commutant_dim(std::span<const BitMatrix> gens);

/// Smallest unital subalgebra of Mat_N(F_2) containing seed and closed under
/// X -> g X g^-1 for every conjugator g. Returned as a basis of flattened
/// N^2-bit vectors. Throws SingularConjugator, ShapeMismatch.
SpanBasis algebra_closure(std::span<const BitMatrix> seed, std::span<const BitMatrix> conjugators);

/// Post-hoc check that basis spans an algebra containing the identity that
/// is stable under conjugation by every conjugator.
bool verify_algebra_closure(const SpanBasis& basis, std::size_t n, std::span<const BitMatrix> conjugators);

/// Repeated closures for a fixed conjugator set with N <= 8, using one
/// machine word per matrix (row i in byte i). Used by exhaustive searches.
class SmallClosureEngine {
 public:
  static constexpr std::size_t kMaxDim = 8;

  explicit SmallClosureEngine(std::span<const BitMatrix> conjugators);

  std::size_t dim() const { return n_; }
  /// Dimension of the closure of {Id} U seed.
  std::size_t closure_dim(std::span<const Word> seed) const;
  static Word pack(const BitMatrix& m);
  static BitMatrix unpack(Word w, std::size_t n);
  Word multiply(Word a, Word b) const;

 private:
  std::size_t n_ = 0;
  Word identity_ = 0;
  std::vector<std::pair<Word, Word>> conj_;  // (g, g^-1)
};

}  // namespace vsl::f2
