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

#include "vsl/hyperjac.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "vsl/error.hpp"
#include "vsl/permmod.hpp"

namespace vsl::hyperjac {

using ff::Field;
using ff::FieldElement;

Poly::Poly(Field field) : field_(std::move(field)) {}

Poly::Poly(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.field() != field_) throw Error(Errc::MixedFields, "coefficient from another field");
  }
  trim();
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::linear(const FieldElement& a) { return Poly(a.field(), {-a, a.field().one()}); }

Poly Poly::x(const Field& field) { return Poly(field, {field.zero(), field.one()}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0].is_one(); }

FieldElement Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

FieldElement Poly::lead() const {
  if (c_.empty()) throw Error(Errc::ZeroElement, "zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(-c);
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scale(const FieldElement& s) const {
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c * s);
  return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error(Errc::InverseOfZero, "division by the zero polynomial");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<FieldElement> r = c_;
  std::vector<FieldElement> q(c_.size() - d.c_.size() + 1, field_.zero());
  const FieldElement inv = d.lead().inverse();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const FieldElement c = r[k + dd] * inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) r[k + j] = r[k + j] - c * d.c_[j];
  }
  r.erase(r.begin() + static_cast<std::ptrdiff_t>(dd), r.end());
  return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != o.c_[i]) return false;
  }
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(lead().inverse());
}

Poly Poly::derivative() const {
  std::vector<FieldElement> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(r));
}

FieldElement Poly::eval(const FieldElement& x) const {
  FieldElement r = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::pow_mod(std::uint64_t e, const Poly& m) const {
  Poly result = Poly::constant(field_.one()) % m;
  Poly base = *this % m;
  while (e) {
    if (e & 1u) result = (result * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return result;
}

Poly Poly::frobenius(unsigned i) const {
  std::vector<FieldElement> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.frobenius(i));
  return Poly(field_, std::move(r));
}

std::vector<std::uint64_t> Poly::coeff_indices() const {
  std::vector<std::uint64_t> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.index());
  return r;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const bool unit = c_[i].is_one() && i > 0;
    if (!unit) s += c_[i].to_string();
    if (i > 0) s += (unit ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
  }
  return s;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f.one()), s1(f);
  Poly t0(f), t1 = Poly::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FieldElement inv = r0.lead().inverse();
  return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

std::vector<unsigned> factor_degrees(const Poly& f) {
  const Field& field = f.field();
  const std::uint64_t q = field.size();
  const Poly x = Poly::x(field);
  std::vector<unsigned> degs;
  Poly rest = f.monic();
  Poly h = x % rest;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(std::max(rest.degree(), 0)); ++d) {
    h = h.pow_mod(q, rest);
    const Poly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      for (int i = 0; i < g.degree() / static_cast<int>(d); ++i) degs.push_back(d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) degs.push_back(static_cast<unsigned>(rest.degree()));
  std::sort(degs.begin(), degs.end());
  return degs;
}

namespace {

void split_into(const Poly& g, std::vector<FieldElement>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.monic().coeff(0));
    return;
  }
  const Field& field = g.field();
  const std::uint64_t q = field.size();
  const Poly one = Poly::constant(field.one());
  for (std::uint64_t i = 0; i < q; ++i) {
    const Poly shifted = Poly::linear(-field.element(i));
    const Poly w = shifted.pow_mod((q - 1) / 2, g) - one;
    const Poly d = gcd(w, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_into(d, out);
      split_into(g / d, out);
      return;
    }
  }
  throw Error(Errc::InvalidInput, "polynomial does not split into distinct linear factors");
}

std::uint64_t lcm_of(const std::vector<unsigned>& v) {
  std::uint64_t r = 1;
  for (auto d : v) r = std::lcm(r, std::uint64_t{d});
  return r;
}

}  // namespace

std::vector<FieldElement> split_roots(const Poly& f) {
  std::vector<FieldElement> roots;
  split_into(f.monic(), roots);
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.index() < b.index(); });
  return roots;
}

std::string to_string(Model m) { return m == Model::Odd ? "odd" : "even_root_at_infinity"; }

Curve curve_create(const Field& base, std::vector<FieldElement> f_coeffs) {
  if (base.characteristic() == 2) throw Error(Errc::EvenCharacteristic, "characteristic 2 is not supported");
  const Poly fb(base, f_coeffs);
  if (fb.is_zero()) throw Error(Errc::InvalidInput, "f is zero");
  const std::size_t n = static_cast<std::size_t>(fb.degree());
  if (n < 5) throw Error(Errc::DegreeTooSmall, "deg f = " + std::to_string(n) + " < 5");
  if (gcd(fb, fb.derivative()).degree() > 0) throw Error(Errc::NotSquarefree, "f has a repeated root");

  const std::uint64_t k = lcm_of(factor_degrees(fb));
  if (k > 12) throw Error(Errc::Unsupported, "splitting degree " + std::to_string(k) + " exceeds 12");
  if (k > 1 && base.degree() != 1) {
    throw Error(Errc::Unsupported, "f does not split over the non-prime base field");
  }
  const Field field = k == 1 ? base : Field::extension(base.characteristic(), static_cast<unsigned>(k));

  std::vector<FieldElement> fw;
  for (const auto& c : fb.coeffs()) fw.push_back(k == 1 ? c : field.from_int(static_cast<std::int64_t>(c.index())));
  const Poly f(field, fw);
  auto roots = split_roots(f);
  if (roots.size() != n) throw Error(Errc::Unsupported, "root count mismatch in the splitting field");

  Curve c{
      .base_field = base,
      .f_coeffs = fb.coeffs(),
      .n = n,
      .genus = (n - 1) / 2,
      .splitting_degree = static_cast<unsigned>(k),
      .field = field,
      .f = f,
      .roots = roots,
      .model = n % 2 ? Model::Odd : Model::EvenRootAtInfinity,
      .h = f,
      .model_x = {},
  };
  if (c.model == Model::Odd) {
    for (const auto& r : roots) c.model_x.emplace_back(r);
    return c;
  }
  // h(z) = sum_i a_i (alpha z + 1)^i z^(n - i).
  const FieldElement& alpha = roots[0];
  const Poly az1(field, {field.one(), alpha});
  Poly h(field);
  Poly power = Poly::constant(field.one());
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<FieldElement> shift(n - i, field.zero());
    shift.push_back(field.one());
    h = h + (power * Poly(field, shift)).scale(f.coeff(i));
    power = power * az1;
  }
  c.h = h;
  c.model_x.emplace_back(std::nullopt);
  for (std::size_t i = 1; i < n; ++i) c.model_x.emplace_back((roots[i] - alpha).inverse());
  return c;
}

Curve curve_create(ff::Coeff p, const std::vector<std::int64_t>& descending) {
  const Field base = Field::prime(p);
  std::vector<FieldElement> coeffs;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) coeffs.push_back(base.from_int(*it));
  if (!descending.empty() && coeffs.back().is_zero()) throw Error(Errc::InvalidInput, "leading coefficient is zero");
  return curve_create(base, std::move(coeffs));
}

Mumford zero_divisor(const Curve& c) { return {Poly::constant(c.field.one()), Poly(c.field)}; }

void validate(const Curve& c, const Mumford& d) {
  if (d.u.is_zero() || !d.u.lead().is_one()) throw Error(Errc::InvalidMumford, "u is not monic");
  if (d.u.field() != c.field || d.v.field() != c.field) throw Error(Errc::InvalidMumford, "wrong field");
  if (d.v.degree() >= d.u.degree()) throw Error(Errc::InvalidMumford, "deg v >= deg u");
  if (!((d.v * d.v - c.h) % d.u).is_zero()) throw Error(Errc::InvalidMumford, "u does not divide v^2 - h");
}

Mumford cantor_add(const Curve& c, const Mumford& a, const Mumford& b) {
  validate(c, a);
  validate(c, b);
  const auto [d0, e1, e2] = xgcd(a.u, b.u);
  const auto [d, c1, c2] = xgcd(d0, a.v + b.v);
  const Poly s1 = c1 * e1;
  const Poly s2 = c1 * e2;
  const Poly& s3 = c2;
  Poly u = (a.u * b.u) / (d * d);
  Poly v = ((s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + c.h)) / d) % u;
  while (u.degree() > static_cast<int>(c.genus)) {
    const Poly next = ((c.h - v * v) / u).monic();
    v = (-v) % next;
    u = next;
  }
  u = u.monic();
  v = v % u;
  return {u, v};
}

Mumford negate(const Curve& c, const Mumford& d) {
  validate(c, d);
  return {d.u, (-d.v) % d.u};
}

TorsionClass two_torsion_class(const Curve& c, const std::vector<std::size_t>& subset) {
  if (subset.size() % 2) throw Error(Errc::OddCardinality, "#T must be even");
  std::vector<std::size_t> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && sorted.back() >= c.n)) {
    throw Error(Errc::RootNotOnCurve, "T must be a set of root indices below " + std::to_string(c.n));
  }
  Poly u = Poly::constant(c.field.one());
  for (auto i : sorted) {
    if (c.model_x[i]) u = u * Poly::linear(*c.model_x[i]);
  }
  const Mumford semi{u, Poly(c.field)};
  return {sorted, cantor_add(c, semi, zero_divisor(c))};
}

namespace {

std::vector<std::size_t> mask_to_subset(std::uint64_t mask) {
  std::vector<std::size_t> r;
  for (std::size_t i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) r.push_back(i);
  }
  return r;
}

std::string mask_string(std::uint64_t mask) {
  std::string s = "{";
  for (auto i : mask_to_subset(mask)) s += (s.size() > 1 ? "," : "") + std::to_string(i);
  return s + "}";
}

std::vector<std::uint64_t> class_key(const Mumford& d) {
  auto k = d.u.coeff_indices();
  k.push_back(~std::uint64_t{0});
  for (auto x : d.v.coeff_indices()) k.push_back(x);
  return k;
}

struct ClassTable {
  std::vector<std::uint64_t> masks;
  std::map<std::uint64_t, Mumford> by_mask;
  std::map<std::vector<std::uint64_t>, std::vector<std::uint64_t>> by_key;
};

ClassTable enumerate_classes(const Curve& c) {
  if (c.n > 13) throw Error(Errc::Unsupported, "subset enumeration supports n <= 13");
  ClassTable t;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.n); ++m) {
    if (std::popcount(m) % 2) continue;
    t.masks.push_back(m);
    const auto cls = two_torsion_class(c, mask_to_subset(m)).reduced;
    t.by_key[class_key(cls)].push_back(m);
    t.by_mask.emplace(m, cls);
  }
  return t;
}

[[noreturn]] void fail(const std::string& check, const std::string& what) {
  throw Error(Errc::VerificationFailed, "check " + check + " failed: " + what);
}

}  // namespace

TwoTorsionReport verify_symdiff_isomorphism(const Curve& c, const VerifyOptions& options) {
  const auto t = enumerate_classes(c);
  TwoTorsionReport r;
  r.n = c.n;
  r.genus = c.genus;
  r.splitting_degree = c.splitting_degree;
  r.model = c.model;
  r.subsets = t.masks.size();
  r.classes = t.by_key.size();
  r.expected_classes = std::uint64_t{1} << (2 * c.genus);

  auto check_pair = [&](std::uint64_t m1, std::uint64_t m2) {
    const auto sum = cantor_add(c, t.by_mask.at(m1), t.by_mask.at(m2));
    if (!(sum == t.by_mask.at(m1 ^ m2))) {
      fail("(a)", "cl(e_T1) + cl(e_T2) != cl(e_(T1 ^ T2)) for T1 = " + mask_string(m1) + ", T2 = " + mask_string(m2));
    }
    ++r.pairs_checked;
  };
  const std::uint64_t s = t.masks.size();
  if (s * s <= options.pair_cap) {
    for (auto m1 : t.masks) {
      for (auto m2 : t.masks) check_pair(m1, m2);
    }
  } else {
    r.pairs_exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, s - 1);
    for (std::uint64_t i = 0; i < options.pair_cap; ++i) check_pair(t.masks[pick(rng)], t.masks[pick(rng)]);
  }
  r.symdiff_law = true;

  for (auto m : t.masks) {
    const auto& cls = t.by_mask.at(m);
    if (!cantor_add(c, cls, cls).is_zero()) fail("(b)", "2 cl(e_T) != 0 for T = " + mask_string(m));
  }
  r.doubling_zero = true;

  const std::uint64_t full = (std::uint64_t{1} << c.n) - 1;
  for (const auto& [key, masks] : t.by_key) {
    const bool ok = c.n % 2 ? masks.size() == 1 : masks.size() == 2 && (masks[0] ^ masks[1]) == full;
    if (!ok) {
      const std::uint64_t m2 = masks.size() > 1 ? masks[1] : masks[0];
      fail("(c)", "class of T1 = " + mask_string(masks[0]) + " is shared inconsistently, T2 = " + mask_string(m2));
    }
  }
  r.distinctness = true;

  if (r.classes != r.expected_classes) {
    fail("(d)", std::to_string(r.classes) + " classes, expected " + std::to_string(r.expected_classes));
  }
  r.class_count = true;

  if (c.n % 2 == 0) {
    if (!t.by_mask.at(full).is_zero()) fail("(e)", "cl(e_B) != 0");
    r.full_set_zero = true;
  }
  return r;
}

FrobeniusReport frobenius_equivariance(const Curve& c) {
  if (c.base_field.degree() != 1) throw Error(Errc::GroundFieldNotPrime, "Frobenius check needs a prime base field");
  const std::uint64_t p = c.base_field.characteristic();
  if (c.model == Model::EvenRootAtInfinity && c.roots[0].index() >= p) {
    throw Error(Errc::Unsupported, "even degree f needs a rational root for the Frobenius check");
  }
  FrobeniusReport r;
  for (const auto& root : c.roots) {
    const auto img = root.frobenius(1);
    const auto it = std::find(c.roots.begin(), c.roots.end(), img);
    if (it == c.roots.end()) throw Error(Errc::VerificationFailed, "Frobenius does not permute the roots");
    r.root_permutation.push_back(static_cast<perm::Point>(it - c.roots.begin()));
  }
  const perm::Permutation phi(r.root_permutation);
  const f2::BitMatrix qb = permmod::qb_matrix(phi);

  const auto t = enumerate_classes(c);
  r.equivariant = true;
  r.matches_qb = true;
  for (auto m : t.masks) {
    const auto& cls = t.by_mask.at(m);
    const Mumford image{cls.u.frobenius(1), cls.v.frobenius(1)};
    std::uint64_t moved = 0;
    for (std::size_t i = 0; i < c.n; ++i) {
      if ((m >> i) & 1u) moved |= std::uint64_t{1} << r.root_permutation[i];
    }
    if (!(image == t.by_mask.at(moved))) r.equivariant = false;
    const auto found = t.by_key.find(class_key(image));
    if (found == t.by_key.end()) {
      r.matches_qb = false;
    } else {
      auto pts = [](std::uint64_t mask) {
        std::vector<perm::Point> v;
        for (auto i : mask_to_subset(mask)) v.push_back(static_cast<perm::Point>(i));
        return v;
      };
      const auto lhs = qb.apply(permmod::subset_to_vector(pts(m), c.n));
      const auto rhs = permmod::subset_to_vector(pts(found->second.front()), c.n);
      if (!(lhs == rhs)) r.matches_qb = false;
    }
    ++r.classes_checked;
  }
  return r;
}

}  // namespace vsl::hyperjac
