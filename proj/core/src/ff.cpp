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

#include "vsl/ff.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "vsl/error.hpp"

namespace vsl::ff {

namespace primepoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

namespace {

Coeff inv_mod(Coeff a, Coeff p) {
  // p is prime: a^(p-2).
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Coeff>(result);
}

Poly sub(Poly a, const Poly& b, Coeff p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

Poly mod(Poly a, const Poly& m, Coeff p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Coeff lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = static_cast<Coeff>((a[shift + j] + p - c * m[j] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, Coeff p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<Coeff>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return mod(std::move(r), m, p);
}

Poly gcd(Poly a, Poly b, Coeff p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<Coeff>(c * li % p);
  }
  return a;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// x^(p^k) mod f by k successive p-th powers.
Poly x_pow_p_iter(const Poly& f, Coeff p, unsigned k) {
  Poly cur = mod(Poly{0, 1}, f, p);
  for (unsigned it = 0; it < k; ++it) {
    Poly result{1};
    Poly base = cur;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) result = mulmod(result, base, f, p);
      base = mulmod(base, base, f, p);
      e >>= 1;
    }
    cur = std::move(result);
  }
  return cur;
}

}  // namespace

bool is_irreducible_rabin(const Poly& f, Coeff p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 0) return false;
  if (m == 1) return true;
  const Poly x{0, 1};
  if (sub(x_pow_p_iter(f, p, m), x, p) != Poly{}) return false;
  for (auto r : prime_factors(m)) {
    Poly h = sub(x_pow_p_iter(f, p, m / static_cast<unsigned>(r)), x, p);
    if (gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

bool is_irreducible_trial(const Poly& f, Coeff p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 0) return false;
  for (unsigned d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t t = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<Coeff>(t % p);
        t /= p;
      }
      if (mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace primepoly

namespace {

// Ascending coefficient lists of the default binary moduli.
std::vector<Coeff> default_binary_modulus(unsigned m) {
  std::vector<unsigned> exps;
  switch (m) {
    case 1: return {0, 1};
    case 2: exps = {2, 1, 0}; break;
    case 3: exps = {3, 1, 0}; break;
    case 4: exps = {4, 1, 0}; break;
    case 5: exps = {5, 2, 0}; break;
    case 6: exps = {6, 1, 0}; break;
    case 7: exps = {7, 1, 0}; break;
    case 8: exps = {8, 4, 3, 2, 0}; break;
    case 9: exps = {9, 4, 0}; break;
    case 10: exps = {10, 3, 0}; break;
    case 11: exps = {11, 2, 0}; break;
    case 12: exps = {12, 6, 4, 1, 0}; break;
    case 13: exps = {13, 4, 3, 1, 0}; break;
    case 14: exps = {14, 10, 6, 1, 0}; break;
    case 15: exps = {15, 1, 0}; break;
    case 16: exps = {16, 12, 3, 1, 0}; break;
    default:
      throw Error(Errc::Unsupported, "no default binary modulus for degree " + std::to_string(m));
  }
  std::vector<Coeff> mod(m + 1, 0);
  for (auto e : exps) mod[e] = 1;
  return mod;
}

bool irreducible(const std::vector<Coeff>& modulus, Coeff p) {
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  if (m <= 1) return true;
  // Exhaustive factor search when the candidate count is small.
  std::uint64_t candidates = 1;
  for (unsigned i = 0; i < m / 2 && candidates <= (1u << 20); ++i) candidates *= p;
  if (m <= 16 && candidates <= (1u << 20)) return primepoly::is_irreducible_trial(modulus, p);
  return primepoly::is_irreducible_rabin(modulus, p);
}

}  // namespace

std::uint64_t FieldSpec::size() const {
  std::uint64_t s = 1;
  for (unsigned i = 0; i < degree; ++i) s *= characteristic;
  return s;
}

Field::Field(std::shared_ptr<const FieldSpec> spec) : spec_(std::move(spec)), size_(spec_->size()) {}

Field Field::create(Coeff characteristic, unsigned degree, std::vector<Coeff> modulus) {
  if (!primepoly::is_prime(characteristic)) {
    throw Error(Errc::NonPrimeCharacteristic, std::to_string(characteristic) + " is not prime");
  }
  if (degree == 0 || modulus.size() != degree + 1 || modulus.back() != 1) {
    throw Error(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(degree));
  }
  // p^m must stay well inside 64 bits.
  long double approx = 1;
  for (unsigned i = 0; i < degree; ++i) approx *= characteristic;
  if (approx > 9.0e18L) throw Error(Errc::Unsupported, "field too large");
  for (auto c : modulus) {
    if (c >= characteristic) throw Error(Errc::InvalidInput, "modulus coefficient not reduced");
  }
  if (!irreducible(modulus, characteristic)) {
    throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(characteristic));
  }
  return Field(std::make_shared<const FieldSpec>(FieldSpec{characteristic, degree, std::move(modulus)}));
}

Field Field::prime(Coeff p) { return create(p, 1, {0, 1}); }

Field Field::binary(unsigned m) { return create(2, m, default_binary_modulus(m)); }

Field Field::extension(Coeff p, unsigned m) {
  if (p == 2) return binary(m);
  if (!primepoly::is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (m == 1) return prime(p);
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Coeff> g(m + 1, 0);
    g[m] = 1;
    std::uint64_t t = idx;
    for (unsigned i = 0; i < m; ++i) {
      g[i] = static_cast<Coeff>(t % p);
      t /= p;
    }
    if (g[0] != 0 && primepoly::is_irreducible_rabin(g, p)) return create(p, m, std::move(g));
  }
  throw Error(Errc::Unsupported, "no irreducible polynomial found");
}

FieldElement Field::zero() const { return FieldElement(*this, std::vector<Coeff>(degree(), 0)); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::generator() const {
  std::vector<Coeff> c(degree(), 0);
  if (degree() == 1) {
    // x mod (x - a) = a.
    c[0] = (characteristic() - spec_->modulus[0]) % characteristic();
  } else {
    c[1] = 1;
  }
  return FieldElement(*this, std::move(c));
}

FieldElement Field::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(characteristic());
  std::vector<Coeff> c(degree(), 0);
  c[0] = static_cast<Coeff>(((v % p) + p) % p);
  return FieldElement(*this, std::move(c));
}

FieldElement Field::from_coeffs(std::vector<Coeff> coeffs) const { return FieldElement(*this, std::move(coeffs)); }

FieldElement Field::element(std::uint64_t index) const {
  if (index >= size_) throw Error(Errc::InvalidInput, "element index out of range");
  std::vector<Coeff> c(degree(), 0);
  for (unsigned i = 0; i < degree(); ++i) {
    c[i] = static_cast<Coeff>(index % characteristic());
    index /= characteristic();
  }
  return FieldElement(*this, std::move(c));
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

FieldElement Field::primitive_element() const {
  auto x = generator();
  if (!x.is_zero() && is_primitive(x)) return x;
  for (std::uint64_t i = 1; i < size_; ++i) {
    auto a = element(i);
    if (is_primitive(a)) return a;
  }
  throw Error(Errc::InvalidInput, "field has no primitive element");  // unreachable
}

bool Field::operator==(const Field& other) const {
  return spec_ == other.spec_ || *spec_ == *other.spec_;
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "F_" << characteristic();
  if (degree() > 1) os << "^" << degree();
  return os.str();
}

FieldElement::FieldElement(Field field, std::vector<Coeff> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  const auto p = field_.characteristic();
  if (c_.size() > field_.degree()) {
    // Reduce an over-long representative modulo the field polynomial.
    std::vector<Coeff> poly(c_.begin(), c_.end());
    for (auto& x : poly) x %= p;
    poly = primepoly::mod(std::move(poly), field_.spec().modulus, p);
    c_ = std::move(poly);
  }
  c_.resize(field_.degree(), 0);
  for (auto& x : c_) x %= p;
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Coeff c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](Coeff c) { return c == 0; });
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = c_.size(); i-- > 0;) idx = idx * field_.characteristic() + c_[i];
  return idx;
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (field_ != o.field_) {
    throw Error(Errc::MixedFields, field_.to_string() + " vs " + o.field_.to_string());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  const auto p = field_.characteristic();
  std::vector<Coeff> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % p;
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  const auto p = field_.characteristic();
  std::vector<Coeff> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + p - o.c_[i]) % p;
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::operator-() const { return field_.zero() - *this; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  const std::uint64_t p = field_.characteristic();
  const std::size_t m = c_.size();
  if (m == 1) return FieldElement(field_, {static_cast<Coeff>(std::uint64_t{c_[0]} * o.c_[0] % p)});
  std::vector<std::uint64_t> t(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < m; ++j) t[i + j] = (t[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p;
  }
  const auto& mod = field_.spec().modulus;
  for (std::size_t i = 2 * m - 2; i >= m; --i) {
    const std::uint64_t c = t[i];
    if (!c) continue;
    t[i] = 0;
    for (std::size_t j = 0; j < m; ++j) t[i - m + j] = (t[i - m + j] + (p - c) * mod[j]) % p;
  }
  std::vector<Coeff> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<Coeff>(t[i]);
  return FieldElement(field_, std::move(r));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::InverseOfZero, "inverse of zero in " + field_.to_string());
  return pow(field_.size() - 2);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FieldElement FieldElement::frobenius(unsigned i) const {
  FieldElement r = *this;
  for (unsigned k = 0; k < i % field_.degree(); ++k) r = r.pow(field_.characteristic());
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(o);
  return c_ == o.c_;
}

std::string FieldElement::to_string() const {
  if (field_.degree() == 1) return std::to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return first ? "0" : os.str();
}

std::uint64_t multiplicative_order(const FieldElement& a) {
  if (a.is_zero()) throw Error(Errc::ZeroElement, "order of zero");
  std::uint64_t order = a.field().size() - 1;
  for (auto r : primepoly::prime_factors(order)) {
    while (order % r == 0 && a.pow(order / r).is_one()) order /= r;
  }
  return order;
}

bool is_primitive(const FieldElement& a) {
  return !a.is_zero() && multiplicative_order(a) == a.field().size() - 1;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {
  if (rows == 0 || cols == 0) throw Error(Errc::ShapeMismatch, "empty matrix");
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty() || rows.front().empty()) throw Error(Errc::ShapeMismatch, "empty matrix");
  Matrix m(field, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(Errc::ShapeMismatch, "ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, FieldElement v) {
  if (v.field() != field_) throw Error(Errc::MixedFields, "matrix entry from another field");
  entries_[r * cols_ + c] = std::move(v);
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw Error(Errc::MixedFields, "matrix product across fields");
  if (cols_ != o.rows_) throw Error(Errc::ShapeMismatch, "inner dimensions differ");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.entries_[i * o.cols_ + j] += a * o.at(k, j);
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (field_ != o.field_) throw Error(Errc::MixedFields, "matrix sum across fields");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(Errc::ShapeMismatch, "shapes differ");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

std::vector<FieldElement> Matrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw Error(Errc::ShapeMismatch, "vector length differs from column count");
  std::vector<FieldElement> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  }
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
  if (!is_square()) throw Error(Errc::ShapeMismatch, "power of non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Matrix::operator==(const Matrix& o) const {
  if (field_ != o.field_) throw Error(Errc::MixedFields, "matrix comparison across fields");
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

FieldElement trace(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::ShapeMismatch, "trace of non-square matrix");
  FieldElement t = m.field().zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

FieldElement det(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::ShapeMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<FieldElement> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.push_back(m.at(i, j));
  }
  FieldElement d = m.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col].is_zero()) ++piv;
    if (piv == n) return m.field().zero();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      d = -d;
    }
    d *= a[col * n + col];
    const FieldElement inv = a[col * n + col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col].is_zero()) continue;
      const FieldElement f = a[r * n + col] * inv;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] = a[r * n + j] - f * a[col * n + j];
    }
  }
  return d;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Errc::MixedFields, "Kronecker product across fields");
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const auto& x = a.at(i1, j1);
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          r.set(i1 * b.rows() + i2, j1 * b.cols() + j2, x * b.at(i2, j2));
        }
      }
    }
  }
  return r;
}

Matrix frobenius_twist(const Matrix& m, unsigned i) {
  if (m.field().characteristic() != 2) {
    throw Error(Errc::OddCharacteristic, "Frobenius twist needs characteristic 2");
  }
  Matrix r = m;
  for (std::size_t a = 0; a < m.rows(); ++a) {
    for (std::size_t b = 0; b < m.cols(); ++b) r.set(a, b, m.at(a, b).frobenius(i));
  }
  return r;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(m.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw Error(Errc::ShapeMismatch, "matrix is singular");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        auto t = a.at(piv, j);
        a.set(piv, j, a.at(col, j));
        a.set(col, j, t);
        auto s = inv.at(piv, j);
        inv.set(piv, j, inv.at(col, j));
        inv.set(col, j, s);
      }
    }
    const FieldElement pinv = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.set(col, j, a.at(col, j) * pinv);
      inv.set(col, j, inv.at(col, j) * pinv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      const FieldElement f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.set(r, j, a.at(r, j) - f * a.at(col, j));
        inv.set(r, j, inv.at(r, j) - f * inv.at(col, j));
      }
    }
  }
  return inv;
}

}  // namespace vsl::ff
