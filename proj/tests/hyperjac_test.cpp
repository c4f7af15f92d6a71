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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "vsl/error.hpp"
#include "vsl/hyperjac.hpp"

namespace vsl::hyperjac {
namespace {

using ff::Field;
using ff::FieldElement;

Poly random_poly(const Field& f, int deg, std::mt19937& rng) {
  std::vector<FieldElement> c;
  for (int i = 0; i <= deg; ++i) c.push_back(f.element(rng() % f.size()));
  return Poly(f, c);
}

Poly from_ints(const Field& f, const std::vector<std::int64_t>& ascending) {
  std::vector<FieldElement> c;
  for (auto v : ascending) c.push_back(f.from_int(v));
  return Poly(f, c);
}

Poly product_of_linears(const Field& f, const std::vector<std::int64_t>& roots) {
  Poly p = Poly::constant(f.one());
  for (auto r : roots) p = p * Poly::linear(f.from_int(r));
  return p;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidInput;
}

TEST(Poly, DivmodIdentity) {
  std::mt19937 rng(3);
  for (const auto& f : {Field::prime(11), Field::extension(5, 3)}) {
    for (int t = 0; t < 50; ++t) {
      const Poly a = random_poly(f, static_cast<int>(rng() % 9), rng);
      Poly b = random_poly(f, static_cast<int>(rng() % 5), rng);
      if (b.is_zero()) continue;
      const auto [q, r] = a.divmod(b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(Poly, XgcdBezout) {
  std::mt19937 rng(4);
  const Field f = Field::prime(7);
  for (int t = 0; t < 50; ++t) {
    const Poly a = random_poly(f, 6, rng);
    const Poly b = random_poly(f, 4, rng);
    const auto [g, s, u] = xgcd(a, b);
    EXPECT_EQ(s * a + u * b, g);
    if (!g.is_zero()) {
      EXPECT_TRUE((a % g).is_zero());
      EXPECT_TRUE((b % g).is_zero());
      EXPECT_EQ(g, gcd(a, b));
    }
  }
}

// Number of roots of f (over F_p) in F_(p^d), by evaluation at every element.
std::size_t count_roots(ff::Coeff p, unsigned d, const std::vector<std::int64_t>& ascending) {
  const Field f = Field::extension(p, d);
  const Poly poly = from_ints(f, ascending);
  std::size_t count = 0;
  for (std::uint64_t i = 0; i < f.size(); ++i) count += poly.eval(f.element(i)).is_zero();
  return count;
}

TEST(FactorDegrees, MatchesRootCounts) {
  const std::vector<std::pair<ff::Coeff, std::vector<std::int64_t>>> cases = {
      {11, {2, 0, 0, 0, 0, 1}},         // x^5 + 2
      {5, {-1, -1, 0, 0, 0, 1}},        // x^5 - x - 1
      {7, {1, 0, 1, 0, 0, 0, 1}},       // x^6 + x^2 + 1
      {3, {1, 1, 0, 1, 0, 1}},          // x^5 + x^3 + x + 1
  };
  for (const auto& [p, coeffs] : cases) {
    const Field f = Field::prime(p);
    const Poly poly = from_ints(f, coeffs);
    if (gcd(poly, poly.derivative()).degree() > 0) continue;
    const auto degs = factor_degrees(poly);
    // Roots in F_(p^d) = sum of the factor degrees dividing d.
    for (unsigned d = 1; d <= 4; ++d) {
      std::size_t expected = 0;
      for (auto k : degs) expected += d % k == 0 ? k : 0;
      EXPECT_EQ(count_roots(p, d, coeffs), expected) << p << " " << d;
    }
  }
  EXPECT_EQ(factor_degrees(from_ints(Field::prime(5), {-1, -1, 0, 0, 0, 1})), (std::vector<unsigned>{5}));
}

TEST(SplitRoots, MatchesEvaluationScan) {
  const Field f = Field::extension(5, 5);
  const Poly poly = from_ints(f, {-1, -1, 0, 0, 0, 1});
  const auto roots = split_roots(poly);
  std::vector<std::uint64_t> scan;
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    if (poly.eval(f.element(i)).is_zero()) scan.push_back(i);
  }
  std::vector<std::uint64_t> got;
  for (const auto& r : roots) got.push_back(r.index());
  EXPECT_EQ(got, scan);
}

TEST(CurveCreate, Examples) {
  const auto c = curve_create(11, {1, -10, 35, -50, 24, 0});  // x(x-1)(x-2)(x-3)(x-4)
  EXPECT_EQ(c.n, 5u);
  EXPECT_EQ(c.genus, 2u);
  EXPECT_EQ(c.splitting_degree, 1u);
  std::vector<std::uint64_t> roots;
  for (const auto& r : c.roots) roots.push_back(r.index());
  EXPECT_EQ(roots, (std::vector<std::uint64_t>{0, 1, 2, 3, 4}));

  const auto c2 = curve_create(11, {1, 0, 0, 0, 0, 2});
  unsigned k = 1;
  while (count_roots(11, k, {2, 0, 0, 0, 0, 1}) < 5) ++k;
  EXPECT_EQ(c2.splitting_degree, k);
  EXPECT_EQ(5u % k, 0u);
  for (const auto& r : c2.roots) EXPECT_TRUE(c2.f.eval(r).is_zero());

  EXPECT_EQ(code_of([] { curve_create(11, {1, 0, 0, 0, 0, 0}); }), Errc::NotSquarefree);
  EXPECT_EQ(code_of([] { curve_create(11, {1, 0, 0, 0, 1}); }), Errc::DegreeTooSmall);
  EXPECT_EQ(code_of([] { curve_create(2, {1, 0, 0, 0, 1, 1}); }), Errc::EvenCharacteristic);
  EXPECT_EQ(code_of([] { curve_create(11, {0, 1, 0, 0, 0, 1}); }), Errc::InvalidInput);
}

TEST(CurveCreate, EvenModelMovesRootToInfinity) {
  const Field f = Field::prime(11);
  const auto c = curve_create(11, {1, -15, 85, -225, 274, -120, 0});  // x(x-1)...(x-5)
  EXPECT_EQ(c.model, Model::EvenRootAtInfinity);
  EXPECT_EQ(c.h.degree(), 5);
  EXPECT_FALSE(c.model_x[0]);
  for (std::size_t i = 1; i < c.n; ++i) EXPECT_TRUE(c.h.eval(*c.model_x[i]).is_zero());
}

// Every F_p-rational reduced divisor (u, v) with deg u <= 2. Elements of
// index below p are the prime subfield of the working field.
std::vector<Mumford> all_reduced_genus2(const Curve& c) {
  const Field& f = c.field;
  const std::uint64_t q = f.characteristic();
  std::vector<Mumford> out;
  out.push_back(zero_divisor(c));
  auto try_add = [&](const Poly& u, const Poly& v) {
    if (((v * v - c.h) % u).is_zero()) out.push_back({u, v});
  };
  for (std::uint64_t a = 0; a < q; ++a) {
    const Poly u(f, {f.element(a), f.one()});
    for (std::uint64_t b = 0; b < q; ++b) try_add(u, Poly(f, {f.element(b)}));
  }
  for (std::uint64_t a0 = 0; a0 < q; ++a0) {
    for (std::uint64_t a1 = 0; a1 < q; ++a1) {
      const Poly u(f, {f.element(a0), f.element(a1), f.one()});
      for (std::uint64_t b0 = 0; b0 < q; ++b0) {
        for (std::uint64_t b1 = 0; b1 < q; ++b1) try_add(u, Poly(f, {f.element(b0), f.element(b1)}));
      }
    }
  }
  return out;
}

int chi(const FieldElement& a) {
  if (a.is_zero()) return 0;
  return a.pow((a.field().size() - 1) / 2).is_one() ? 1 : -1;
}

// #C(F_q) for y^2 = f including points at infinity.
std::int64_t point_count(const Field& f, const std::vector<std::int64_t>& ascending) {
  const Poly poly = from_ints(f, ascending);
  std::int64_t n = 0;
  for (std::uint64_t i = 0; i < f.size(); ++i) n += 1 + chi(poly.eval(f.element(i)));
  if (poly.degree() % 2) {
    n += 1;
  } else {
    n += 1 + chi(poly.lead());
  }
  return n;
}

// Genus 2: #J(F_q) = (N1^2 + N2) / 2 - q.
TEST(Cantor, JacobianOrderMatchesPointCount) {
  const std::vector<std::vector<std::int64_t>> curves = {
      {0, 24, -50, 35, -10, 1},      // x(x-1)(x-2)(x-3)(x-4)
      {1, 3, 0, 2, 0, 1},            // x^5 + 2x^3 + 3x + 1
      {0, -120, 274, -225, 85, -15, 1},
  };
  for (const auto& asc : curves) {
    std::vector<std::int64_t> desc(asc.rbegin(), asc.rend());
    const auto c = curve_create(11, desc);
    const std::int64_t n1 = point_count(Field::prime(11), asc);
    const std::int64_t n2 = point_count(Field::extension(11, 2), asc);
    const std::int64_t order = (n1 * n1 + n2) / 2 - 11;
    const auto all = all_reduced_genus2(c);
    EXPECT_EQ(static_cast<std::int64_t>(all.size()), order);
    std::mt19937 rng(5);
    for (int t = 0; t < 5; ++t) {
      const auto& d = all[rng() % all.size()];
      // Lagrange: order * D = 0, by double-and-add.
      Mumford acc = zero_divisor(c), base = d;
      for (auto e = static_cast<std::uint64_t>(order); e; e >>= 1) {
        if (e & 1u) acc = cantor_add(c, acc, base);
        base = cantor_add(c, base, base);
      }
      EXPECT_TRUE(acc.is_zero());
    }
  }
}

TEST(Cantor, GroupAxioms) {
  const auto c = curve_create(11, {1, 0, 2, 0, 3, 1});
  const auto all = all_reduced_genus2(c);
  std::mt19937 rng(6);
  const auto zero = zero_divisor(c);
  for (int t = 0; t < 200; ++t) {
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& d = all[rng() % all.size()];
    EXPECT_EQ(cantor_add(c, a, zero), a);
    EXPECT_TRUE(cantor_add(c, a, negate(c, a)).is_zero());
    EXPECT_EQ(cantor_add(c, a, b), cantor_add(c, b, a));
    EXPECT_EQ(cantor_add(c, cantor_add(c, a, b), d), cantor_add(c, a, cantor_add(c, b, d)));
  }
}

TEST(Cantor, CoprimeComposition) {
  const Field f = Field::prime(11);
  const auto c = curve_create(11, {1, -10, 35, -50, 24, 0});
  const Mumford a{Poly::linear(f.from_int(1)), Poly(f)};
  const Mumford b{Poly::linear(f.from_int(2)), Poly(f)};
  const auto s = cantor_add(c, a, b);
  EXPECT_EQ(s.u, product_of_linears(f, {1, 2}));
  EXPECT_TRUE(s.v.is_zero());
  EXPECT_EQ(code_of([&] { cantor_add(c, {Poly::linear(f.from_int(5)), Poly(f)}, a); }), Errc::InvalidMumford);
}

TEST(TwoTorsion, ClassesAndErrors) {
  const Field f = Field::prime(11);
  const auto c = curve_create(11, {1, -10, 35, -50, 24, 0});
  EXPECT_TRUE(two_torsion_class(c, {}).reduced.is_zero());
  const auto pair = two_torsion_class(c, {1, 3});
  EXPECT_EQ(pair.reduced.u, product_of_linears(f, {1, 3}));
  EXPECT_TRUE(pair.reduced.v.is_zero());
  const auto four = two_torsion_class(c, {0, 1, 2, 3});
  EXPECT_LE(four.reduced.u.degree(), 2);
  EXPECT_TRUE(cantor_add(c, four.reduced, four.reduced).is_zero());
  // For odd n, T and its complement with the point at infinity agree:
  // {0,1,2,3} ~ {4}.
  EXPECT_EQ(four.reduced.u, product_of_linears(f, {4}));
  EXPECT_EQ(code_of([&] { two_torsion_class(c, {1}); }), Errc::OddCardinality);
  EXPECT_EQ(code_of([&] { two_torsion_class(c, {1, 7}); }), Errc::RootNotOnCurve);
  EXPECT_EQ(code_of([&] { two_torsion_class(c, {2, 2}); }), Errc::RootNotOnCurve);
}

// J[2] found by brute force among all reduced divisors.
std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> brute_two_torsion(const Curve& c) {
  std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> out;
  for (const auto& d : all_reduced_genus2(c)) {
    if (cantor_add(c, d, d).is_zero()) out.insert({d.u.coeff_indices(), d.v.coeff_indices()});
  }
  return out;
}

TEST(Verify, SplitQuinticAndSextic) {
  for (const auto& desc : std::vector<std::vector<std::int64_t>>{{1, -10, 35, -50, 24, 0},
                                                                  {1, -15, 85, -225, 274, -120, 0}}) {
    const auto c = curve_create(11, desc);
    const auto r = verify_symdiff_isomorphism(c);
    EXPECT_EQ(r.classes, 16u);
    EXPECT_EQ(r.expected_classes, 16u);
    EXPECT_TRUE(r.pairs_exhaustive);
    EXPECT_EQ(r.pairs_checked, r.subsets * r.subsets);
    EXPECT_TRUE(r.symdiff_law && r.doubling_zero && r.distinctness && r.class_count);
    EXPECT_EQ(r.full_set_zero.has_value(), c.n % 2 == 0);
    // Surjectivity onto J[2]: the e_T classes are exactly the brute-force
    // 2-torsion set.
    std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> from_subsets;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.n); ++m) {
      if (std::popcount(m) % 2) continue;
      std::vector<std::size_t> t;
      for (std::size_t i = 0; i < c.n; ++i) {
        if ((m >> i) & 1u) t.push_back(i);
      }
      const auto cls = two_torsion_class(c, t).reduced;
      from_subsets.insert({cls.u.coeff_indices(), cls.v.coeff_indices()});
    }
    EXPECT_EQ(from_subsets, brute_two_torsion(c));
  }
}

TEST(Verify, PairSamplingAboveCap) {
  const auto c = curve_create(11, {1, -10, 35, -50, 24, 0});
  const auto r = verify_symdiff_isomorphism(c, {.pair_cap = 100, .seed = 7});
  EXPECT_FALSE(r.pairs_exhaustive);
  EXPECT_EQ(r.pairs_checked, 100u);
}

TEST(Verify, GenusThreeSplit) {
  // x(x-1)...(x-6) over F_13: g = 3, 64 classes.
  const auto c = curve_create(13, {1, -21, 175, -735, 1624, -1764, 720, 0});
  const auto r = verify_symdiff_isomorphism(c);
  EXPECT_EQ(r.genus, 3u);
  EXPECT_EQ(r.classes, 64u);
}

TEST(Frobenius, SplitIsTrivial) {
  const auto c = curve_create(11, {1, -10, 35, -50, 24, 0});
  const auto r = frobenius_equivariance(c);
  EXPECT_EQ(r.root_permutation, (std::vector<perm::Point>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(r.equivariant);
  EXPECT_TRUE(r.matches_qb);
}

TEST(Frobenius, IrreducibleQuinticOverF5) {
  const auto c = curve_create(5, {1, 0, 0, 0, -1, -1});  // x^5 - x - 1
  EXPECT_EQ(c.splitting_degree, 5u);
  const auto r = frobenius_equivariance(c);
  EXPECT_EQ(perm::Permutation(r.root_permutation).order(), 5u);
  EXPECT_EQ(r.classes_checked, 16u);
  EXPECT_TRUE(r.equivariant);
  EXPECT_TRUE(r.matches_qb);
  EXPECT_TRUE(verify_symdiff_isomorphism(c).class_count);
}

TEST(Frobenius, EvenDegreeWithRationalRoot) {
  const auto c = curve_create(5, {1, 0, 0, 0, -1, -1, 0});  // x (x^5 - x - 1)
  const auto r = frobenius_equivariance(c);
  EXPECT_EQ(r.root_permutation[0], 0u);
  EXPECT_TRUE(r.equivariant);
  EXPECT_TRUE(r.matches_qb);
}

TEST(Frobenius, Errors) {
  // Irreducible sextic over F_5: no rational root to move to infinity.
  const Field f5 = Field::prime(5);
  std::vector<std::int64_t> desc;
  for (std::int64_t a = 0; a < 625 && desc.empty(); ++a) {
    std::vector<std::int64_t> asc = {a % 5, (a / 5) % 5, (a / 25) % 5, (a / 125) % 5, 0, 0, 1};
    const Poly p = from_ints(f5, asc);
    if (gcd(p, p.derivative()).degree() > 0) continue;
    if (factor_degrees(p) == std::vector<unsigned>{6}) desc.assign(asc.rbegin(), asc.rend());
  }
  ASSERT_FALSE(desc.empty());
  const auto c = curve_create(5, desc);
  EXPECT_EQ(code_of([&] { frobenius_equivariance(c); }), Errc::Unsupported);
  EXPECT_TRUE(verify_symdiff_isomorphism(c).class_count);

  const Field f9 = Field::extension(3, 2);
  Poly p = Poly::constant(f9.one());
  for (std::uint64_t i = 0; i < 5; ++i) p = p * Poly::linear(f9.element(i));
  const auto c9 = curve_create(f9, p.coeffs());
  EXPECT_EQ(code_of([&] { frobenius_equivariance(c9); }), Errc::GroundFieldNotPrime);
}

}  // namespace
}  // namespace vsl::hyperjac
