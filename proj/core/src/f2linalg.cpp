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

#include "vsl/f2linalg.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

#include "vsl/error.hpp"

namespace vsl::f2 {

namespace {

inline Word tail_mask(std::size_t bits) {
  const std::size_t r = bits % kWordBits;
  return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace

BitVec& BitVec::operator^=(const BitVec& o) {
  if (o.nbits_ != nbits_) throw Error(Errc::LengthMismatch, "bit vector lengths differ");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

bool BitVec::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitVec::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::lowest_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return nbits_;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::unflatten(const BitVec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(Errc::LengthMismatch, "flattened length differs from rows*cols");
  BitMatrix m(rows, cols);
  if (cols % kWordBits == 0) {
    std::copy(v.words().begin(), v.words().end(), m.data_.begin());
    return m;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (v.get(r * cols + c)) m.set(r, c);
    }
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  Word& w = data_[r * wpr_ + c / kWordBits];
  const Word mask = Word{1} << (c % kWordBits);
  if (v) {
    w |= mask;
  } else {
    w &= ~mask;
  }
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "sum of differently shaped matrices");
  BitMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] ^= o.data_[i];
  return r;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
  BitMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Word* out = r.data_.data() + i * r.wpr_;
    const Word* a = data_.data() + i * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) {
      Word bits = a[w];
      while (bits) {
        const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const Word* b = o.data_.data() + k * o.wpr_;
        for (std::size_t j = 0; j < r.wpr_; ++j) out[j] ^= b[j];
      }
    }
  }
  return r;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const Word* a = data_.data() + r * wpr_;
    for (std::size_t w = 0; w < wpr_; ++w) {
      Word bits = a[w];
      while (bits) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        t.set(c, r);
      }
    }
  }
  return t;
}

BitVec BitMatrix::flatten() const {
  BitVec v(rows_ * cols_);
  if (cols_ % kWordBits == 0) {
    std::copy(data_.begin(), data_.end(), v.words().begin());
    return v;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) v.set(r * cols_ + c);
    }
  }
  return v;
}

BitVec BitMatrix::row_vector(std::size_t r) const {
  BitVec v(cols_);
  std::copy(row(r).begin(), row(r).end(), v.words().begin());
  return v;
}

bool BitMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Word w) { return w == 0; });
}

bool BitMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

std::size_t BitMatrix::rank() const {
  std::vector<Word> a = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t w = c / kWordBits;
    const Word mask = Word{1} << (c % kWordBits);
    std::size_t piv = rank;
    while (piv < rows_ && !(a[piv * wpr_ + w] & mask)) ++piv;
    if (piv == rows_) continue;
    if (piv != rank) {
      std::swap_ranges(a.begin() + piv * wpr_, a.begin() + (piv + 1) * wpr_, a.begin() + rank * wpr_);
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a[r * wpr_ + w] & mask) {
        for (std::size_t j = w; j < wpr_; ++j) a[r * wpr_ + j] ^= a[rank * wpr_ + j];
      }
    }
    ++rank;
  }
  return rank;
}

bool BitMatrix::is_invertible() const { return is_square() && rank() == rows_; }

BitMatrix BitMatrix::inverse() const {
  if (!is_square()) throw Error(Errc::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = rows_;
  BitMatrix a = *this;
  BitMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !a.get(piv, c)) ++piv;
    if (piv == n) throw Error(Errc::SingularConjugator, "matrix is singular over F_2");
    if (piv != c) {
      std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(c).begin());
      std::swap_ranges(inv.row(piv).begin(), inv.row(piv).end(), inv.row(c).begin());
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || !a.get(r, c)) continue;
      for (std::size_t j = 0; j < a.wpr_; ++j) {
        a.row(r)[j] ^= a.row(c)[j];
        inv.row(r)[j] ^= inv.row(c)[j];
      }
    }
  }
  return inv;
}

BitVec BitMatrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw Error(Errc::LengthMismatch, "vector length differs from column count");
  BitVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Word acc = 0;
    for (std::size_t w = 0; w < wpr_; ++w) acc ^= row(r)[w] & v.words()[w];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

std::vector<std::string> BitMatrix::to_hex_rows() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::vector<std::string> out;
  out.reserve(rows_);
  const std::size_t nibbles = (cols_ + 3) / 4;
  for (std::size_t r = 0; r < rows_; ++r) {
    std::string s(nibbles, '0');
    for (std::size_t k = 0; k < nibbles; ++k) {
      unsigned v = 0;
      for (unsigned t = 0; t < 4 && 4 * k + t < cols_; ++t) {
        if (get(r, 4 * k + t)) v |= 1u << t;
      }
      s[k] = kHex[v];
    }
    out.push_back(std::move(s));
  }
  return out;
}

BitMatrix BitMatrix::from_hex_rows(std::size_t rows, std::size_t cols, const std::vector<std::string>& hex) {
  if (hex.size() != rows) throw Error(Errc::ShapeMismatch, "hex row count differs from rows");
  BitMatrix m(rows, cols);
  const std::size_t nibbles = (cols + 3) / 4;
  for (std::size_t r = 0; r < rows; ++r) {
    if (hex[r].size() != nibbles) throw Error(Errc::LengthMismatch, "hex row has wrong length");
    for (std::size_t k = 0; k < nibbles; ++k) {
      const char ch = hex[r][k];
      unsigned v;
      if (ch >= '0' && ch <= '9') {
        v = static_cast<unsigned>(ch - '0');
      } else if (ch >= 'a' && ch <= 'f') {
        v = static_cast<unsigned>(ch - 'a' + 10);
      } else if (ch >= 'A' && ch <= 'F') {
        v = static_cast<unsigned>(ch - 'A' + 10);
      } else {
        throw Error(Errc::InvalidInput, "bad hex digit");
      }
      for (unsigned t = 0; t < 4; ++t) {
        if (!(v >> t & 1u)) continue;
        if (4 * k + t >= cols) throw Error(Errc::InvalidInput, "nonzero padding bit in hex row");
        m.set(r, 4 * k + t);
      }
    }
  }
  return m;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
  BitMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      if (!a.get(i1, j1)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          if (b.get(i2, j2)) r.set(i1 * b.rows() + i2, j1 * b.cols() + j2);
        }
      }
    }
  }
  return r;
}

bool SpanBasis::insert(BitVec v) {
  if (v.size() != ambient_) throw Error(Errc::LengthMismatch, "vector length differs from ambient dimension");
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const std::size_t p = v.lowest_set();
  const std::size_t w = p / kWordBits;
  const Word mask = Word{1} << (p % kWordBits);
  for (auto& row : rows_) {
    if (row.words()[w] & mask) row ^= v;
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

BitVec SpanBasis::reduce(BitVec v) const {
  if (v.size() != ambient_) throw Error(Errc::LengthMismatch, "vector length differs from ambient dimension");
  // Rows are fully reduced, so each pivot decision only depends on v itself.
  auto vw = v.words();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (!((vw[p / kWordBits] >> (p % kWordBits)) & 1u)) continue;
    const auto rw = rows_[i].words();
    for (std::size_t j = p / kWordBits; j < vw.size(); ++j) vw[j] ^= rw[j];
  }
  return v;
}

std::size_t commutant_dim(std::span<const BitMatrix> gens) {
  if (gens.empty()) throw Error(Errc::ShapeMismatch, "no generators");
  const std::size_t n = gens.front().rows();
  for (const auto& g : gens) {
    if (!g.is_square() || g.rows() != n) throw Error(Errc::ShapeMismatch, "generators must be square of equal size");
  }
  const std::size_t unknowns = n * n;
  SpanBasis constraints(unknowns);
  for (const auto& a : gens) {
    const BitMatrix at = a.transpose();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // (A X + X A)_{ij} = sum_k A_ik X_kj + sum_k X_ik A_kj
        BitVec row(unknowns);
        for (std::size_t k = 0; k < n; ++k) {
          if (a.get(i, k)) row.flip(k * n + j);
          if (at.get(j, k)) row.flip(i * n + k);
        }
        constraints.insert(std::move(row));
        // Scalars always commute, so rank n^2 - 1 is final.
        if (constraints.rank() + 1 == unknowns) return 1;
      }
    }
  }
  return unknowns - constraints.rank();
}

SpanBasis algebra_closure(std::span<const BitMatrix> seed, std::span<const BitMatrix> conjugators) {
  std::size_t n = 0;
  if (!seed.empty()) {
    n = seed.front().rows();
  } else if (!conjugators.empty()) {
    n = conjugators.front().rows();
  } else {
    throw Error(Errc::ShapeMismatch, "empty seed and conjugator lists");
  }
  auto check = [n](const BitMatrix& m) {
    if (!m.is_square() || m.rows() != n) throw Error(Errc::ShapeMismatch, "matrices must be square of equal size");
  };
  for (const auto& s : seed) check(s);
  std::vector<std::pair<BitMatrix, BitMatrix>> conj;
  for (const auto& g : conjugators) {
    check(g);
    if (!g.is_invertible()) throw Error(Errc::SingularConjugator, "conjugator is singular");
    conj.emplace_back(g, g.inverse());
  }

  SpanBasis basis(n * n);
  std::vector<BitMatrix> elems;
  std::deque<std::size_t> work;
  auto try_add = [&](BitMatrix m) {
    if (basis.insert(m.flatten())) {
      elems.push_back(std::move(m));
      work.push_back(elems.size() - 1);
    }
  };
  try_add(BitMatrix::identity(n));
  for (const auto& s : seed) try_add(s);
  while (!work.empty() && !basis.full()) {
    const BitMatrix x = elems[work.front()];
    work.pop_front();
    for (const auto& [g, ginv] : conj) try_add(g * x * ginv);
    const std::size_t count = elems.size();
    for (std::size_t k = 0; k < count && !basis.full(); ++k) {
      try_add(x * elems[k]);
      try_add(elems[k] * x);
    }
  }
  return basis;
}

bool verify_algebra_closure(const SpanBasis& basis, std::size_t n, std::span<const BitMatrix> conjugators) {
  if (basis.ambient_dim() != n * n) return false;
  if (!basis.contains(BitMatrix::identity(n).flatten())) return false;
  std::vector<BitMatrix> elems;
  for (const auto& r : basis.rows()) elems.push_back(BitMatrix::unflatten(r, n, n));
  for (const auto& g : conjugators) {
    const BitMatrix ginv = g.inverse();
    for (const auto& x : elems) {
      if (!basis.contains((g * x * ginv).flatten())) return false;
    }
  }
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (!basis.contains((x * y).flatten())) return false;
    }
  }
  return true;
}

SmallClosureEngine::SmallClosureEngine(std::span<const BitMatrix> conjugators) {
  if (conjugators.empty()) throw Error(Errc::ShapeMismatch, "no conjugators");
  n_ = conjugators.front().rows();
  if (n_ == 0 || n_ > kMaxDim) throw Error(Errc::DimensionTooLarge, "small closure engine supports N <= 8");
  identity_ = pack(BitMatrix::identity(n_));
  for (const auto& g : conjugators) {
    if (!g.is_square() || g.rows() != n_) throw Error(Errc::ShapeMismatch, "conjugators must share size");
    if (!g.is_invertible()) throw Error(Errc::SingularConjugator, "conjugator is singular");
    conj_.emplace_back(pack(g), pack(g.inverse()));
  }
}

Word SmallClosureEngine::pack(const BitMatrix& m) {
  Word w = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) w |= Word{1} << (8 * r + c);
    }
  }
  return w;
}

BitMatrix SmallClosureEngine::unpack(Word w, std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if ((w >> (8 * r + c)) & 1u) m.set(r, c);
    }
  }
  return m;
}

Word SmallClosureEngine::multiply(Word a, Word b) const {
  Word out = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    Word row = (a >> (8 * i)) & 0xffu;
    Word acc = 0;
    while (row) {
      const int k = std::countr_zero(row);
      row &= row - 1;
      acc ^= (b >> (8 * k)) & 0xffu;
    }
    out |= acc << (8 * i);
  }
  return out;
}

std::size_t SmallClosureEngine::closure_dim(std::span<const Word> seed) const {
  // Echelon basis keyed by lowest set bit.
  Word by_pivot[64] = {};
  Word elems[64];
  std::size_t count = 0;
  std::size_t head = 0;
  const std::size_t full = n_ * n_;
  auto try_add = [&](Word m) {
    Word v = m;
    while (v) {
      const int p = std::countr_zero(v);
      if (!by_pivot[p]) {
        by_pivot[p] = v;
        elems[count++] = m;
        return;
      }
      v ^= by_pivot[p];
    }
  };
  try_add(identity_);
  for (auto s : seed) try_add(s);
  while (head < count && count < full) {
    const Word x = elems[head++];
    for (const auto& [g, ginv] : conj_) try_add(multiply(multiply(g, x), ginv));
    const std::size_t snapshot = count;
    for (std::size_t k = 0; k < snapshot && count < full; ++k) {
      try_add(multiply(x, elems[k]));
      try_add(multiply(elems[k], x));
    }
  }
  return count;
}

}  // namespace vsl::f2
