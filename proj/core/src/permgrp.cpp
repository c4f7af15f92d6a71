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

#include "vsl/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <limits>
#include <sstream>

#include "vsl/error.hpp"

namespace vsl::perm {

Permutation::Permutation(std::size_t n) : images_(n) { std::iota(images_.begin(), images_.end(), Point{0}); }

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto p : images_) {
    if (p >= images_.size() || seen[p]) throw Error(Errc::InvalidInput, "image array is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const Point a = cyc[i];
      if (a >= n || used[a]) throw Error(Errc::InvalidInput, "cycles overlap or leave the domain");
      used[a] = true;
      img[a] = cyc[(i + 1) % cyc.size()];
    }
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw Error(Errc::InvalidInput, "composing permutations of different degree");
  Permutation r = rhs;
  for (auto& p : r.images_) p = images_[p];
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) c += images_[i] == i;
  return c;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      os << (j == i ? "" : " ") << j;
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

ElementStats element_stats(const Permutation& g) {
  ElementStats s;
  s.fixed_points = g.fixed_point_count();
  s.order = g.order();
  s.two_regular = (s.order % 2) == 1;
  return s;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
  if (gens_.empty()) throw Error(Errc::InvalidInput, "a group needs at least one generator");
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw Error(Errc::InvalidInput, "generator degree differs from group degree");
  }
}

Permutation PermGroup::evaluate(const std::vector<std::size_t>& word) const {
  Permutation r(degree_);
  for (auto idx : word) {
    if (idx >= gens_.size()) throw Error(Errc::InvalidInput, "word letter out of range");
    r = r * gens_[idx];
  }
  return r;
}

Orbit orbit(const PermGroup& g, Point p) {
  if (p >= g.degree()) throw Error(Errc::PointOutOfRange, "point " + std::to_string(p) + " outside degree");
  Orbit o;
  o.root = p;
  o.witness.assign(g.degree(), std::nullopt);
  o.witness[p] = std::vector<std::size_t>{};
  o.points.push_back(p);
  for (std::size_t head = 0; head < o.points.size(); ++head) {
    const Point x = o.points[head];
    for (std::size_t s = 0; s < g.generators().size(); ++s) {
      const Point y = g.generators()[s](x);
      if (o.witness[y]) continue;
      std::vector<std::size_t> w{s};
      w.insert(w.end(), o.witness[x]->begin(), o.witness[x]->end());
      o.witness[y] = std::move(w);
      o.points.push_back(y);
    }
  }
  return o;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    auto o = orbit(g, p).points;
    for (auto x : o) seen[x] = true;
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

std::uint64_t Bsgs::order() const {
  std::uint64_t o = 1;
  for (const auto& l : levels_) {
    if (o > std::numeric_limits<std::uint64_t>::max() / l.orbit.size()) {
      throw Error(Errc::Unsupported, "group order exceeds 64 bits");
    }
    o *= l.orbit.size();
  }
  return o;
}

std::pair<Permutation, std::size_t> Bsgs::sift(const Permutation& g) const {
  Permutation h = g;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    const Point beta = h(levels_[l].base_point);
    const auto& u = levels_[l].transversal[beta];
    if (!u) return {h, l};
    h = u->inverse() * h;
  }
  return {h, levels_.size()};
}

bool Bsgs::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, level] = sift(g);
  return level == levels_.size() && h.is_identity();
}

std::vector<std::size_t> Bsgs::witness_word(std::size_t level, Point p) const {
  const auto& l = levels_.at(level);
  if (p >= degree_ || !l.transversal[p]) throw Error(Errc::PointOutOfRange, "point not in fundamental orbit");
  std::vector<std::size_t> word;
  Point cur = p;
  while (l.schreier[cur] >= 0) {
    const auto s = static_cast<std::size_t>(l.schreier[cur]);
    word.push_back(s);
    cur = strong_[s].inverse()(cur);
  }
  return word;
}

std::vector<Permutation> Bsgs::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level < levels_.size()) {
    for (auto idx : levels_[level].gens) out.push_back(strong_[idx]);
  }
  if (out.empty()) out.emplace_back(degree_);
  return out;
}

Permutation Bsgs::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (const auto& l : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
    g = g * *l.transversal[l.orbit[pick(rng)]];
  }
  return g;
}

void Bsgs::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
  std::function<bool(std::size_t, const Permutation&)> rec = [&](std::size_t level, const Permutation& prefix) {
    if (level == levels_.size()) return visit(prefix);
    const auto& l = levels_[level];
    for (auto beta : l.orbit) {
      if (!rec(level + 1, prefix * *l.transversal[beta])) return false;
    }
    return true;
  };
  rec(0, Permutation(degree_));
}

void Bsgs::rebuild_level(std::size_t i) {
  Level& l = levels_[i];
  l.orbit.assign(1, l.base_point);
  l.transversal.assign(degree_, std::nullopt);
  l.schreier.assign(degree_, -2);
  l.transversal[l.base_point] = Permutation(degree_);
  l.schreier[l.base_point] = -1;
  for (std::size_t head = 0; head < l.orbit.size(); ++head) {
    const Point x = l.orbit[head];
    for (auto s : l.gens) {
      const Point y = strong_[s](x);
      if (l.transversal[y]) continue;
      l.transversal[y] = strong_[s] * *l.transversal[x];
      l.schreier[y] = static_cast<std::int64_t>(s);
      l.orbit.push_back(y);
    }
  }
}

Bsgs bsgs_build(const PermGroup& group, const BsgsOptions& options) {
  const std::size_t n = group.degree();
  Bsgs b;
  b.degree_ = n;

  std::vector<Point> base;
  for (auto p : options.base_prefix) {
    if (p >= n) throw Error(Errc::PointOutOfRange, "base point outside degree");
    if (std::find(base.begin(), base.end(), p) == base.end()) base.push_back(p);
  }
  auto moved_point = [&](const Permutation& g) {
    if (options.descending) {
      for (std::size_t x = n; x-- > 0;) {
        if (g(static_cast<Point>(x)) != x) return static_cast<Point>(x);
      }
    } else {
      for (Point x = 0; x < n; ++x) {
        if (g(x) != x) return x;
      }
    }
    throw Error(Errc::InvalidInput, "identity has no moved point");
  };
  auto fixes_prefix = [](const Permutation& g, const std::vector<Point>& pts, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
      if (g(pts[i]) != pts[i]) return false;
    }
    return true;
  };

  for (const auto& g : group.generators()) {
    if (g.is_identity()) continue;
    if (std::find(b.strong_.begin(), b.strong_.end(), g) != b.strong_.end()) continue;
    b.strong_.push_back(g);
    if (fixes_prefix(g, base, base.size())) base.push_back(moved_point(g));
  }

  for (std::size_t i = 0; i < base.size(); ++i) {
    Bsgs::Level l;
    l.base_point = base[i];
    for (std::size_t s = 0; s < b.strong_.size(); ++s) {
      if (fixes_prefix(b.strong_[s], base, i)) l.gens.push_back(s);
    }
    b.levels_.push_back(std::move(l));
    b.rebuild_level(i);
  }

  auto sift_from = [&b](Permutation h, std::size_t start) -> std::pair<Permutation, std::size_t> {
    for (std::size_t l = start; l < b.levels_.size(); ++l) {
      const Point beta = h(b.levels_[l].base_point);
      const auto& u = b.levels_[l].transversal[beta];
      if (!u) return {h, l};
      h = u->inverse() * h;
    }
    return {h, b.levels_.size()};
  };

  std::int64_t i = static_cast<std::int64_t>(b.levels_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    bool extended = false;
    const std::vector<Point> orbit_pts = b.levels_[level].orbit;
    const std::vector<std::size_t> gens = b.levels_[level].gens;
    for (std::size_t oi = 0; oi < orbit_pts.size() && !extended; ++oi) {
      const Point beta = orbit_pts[oi];
      const Permutation& u_beta = *b.levels_[level].transversal[beta];
      for (auto s : gens) {
        const Permutation& sg = b.strong_[s];
        const Point image = sg(beta);
        const Permutation schreier_gen = b.levels_[level].transversal[image]->inverse() * (sg * u_beta);
        auto [residue, j] = sift_from(schreier_gen, level + 1);
        if (j == b.levels_.size() && residue.is_identity()) continue;
        b.strong_.push_back(residue);
        const std::size_t idx = b.strong_.size() - 1;
        if (j == b.levels_.size()) {
          Bsgs::Level l;
          l.base_point = moved_point(residue);
          b.levels_.push_back(std::move(l));
        }
        for (std::size_t l = level + 1; l <= j; ++l) {
          b.levels_[l].gens.push_back(idx);
          b.rebuild_level(l);
        }
        i = static_cast<std::int64_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
  return b;
}

std::uint64_t group_order(const Bsgs& b) { return b.order(); }

bool contains(const Bsgs& b, const Permutation& g) { return b.contains(g); }

std::string_view to_string(Transitivity t) {
  switch (t) {
    case Transitivity::Intransitive: return "intransitive";
    case Transitivity::Transitive: return "transitive";
    case Transitivity::TwoTransitive: return "2-transitive";
  }
  return "unknown";
}

PermGroup point_stabilizer(const PermGroup& g, Point p) {
  const Bsgs b = bsgs_build(g, {.base_prefix = {p}});
  return PermGroup(g.degree(), b.stabilizer_generators(1));
}

Transitivity transitivity(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (orbit(g, 0).points.size() != n) return Transitivity::Intransitive;
  if (n < 2) return Transitivity::Transitive;
  const PermGroup stab = point_stabilizer(g, 0);
  return orbit(stab, 1).points.size() == n - 1 ? Transitivity::TwoTransitive : Transitivity::Transitive;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> gens;
  const auto& gs = g.generators();
  for (std::size_t a = 0; a < gs.size(); ++a) {
    for (std::size_t c = a + 1; c < gs.size(); ++c) {
      Permutation comm = gs[a].inverse() * gs[c].inverse() * gs[a] * gs[c];
      if (!comm.is_identity()) gens.push_back(std::move(comm));
    }
  }
  if (gens.empty()) return PermGroup(g.degree(), {Permutation(g.degree())});
  Bsgs b = bsgs_build(PermGroup(g.degree(), gens));
  std::deque<Permutation> work(gens.begin(), gens.end());
  while (!work.empty()) {
    const Permutation x = work.front();
    work.pop_front();
    for (const auto& s : gs) {
      Permutation c = s.inverse() * x * s;
      if (b.contains(c)) continue;
      gens.push_back(c);
      work.push_back(std::move(c));
      b = bsgs_build(PermGroup(g.degree(), gens));
    }
  }
  return PermGroup(g.degree(), std::move(gens));
}

std::uint64_t abelianization_order(const PermGroup& g) {
  return bsgs_build(g).order() / bsgs_build(derived_subgroup(g)).order();
}

bool is_perfect(const PermGroup& g) { return abelianization_order(g) == 1; }

}  // namespace vsl::perm
