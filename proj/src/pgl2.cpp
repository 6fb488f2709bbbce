// Copyright 2026 The galpts Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "galpts/pgl2.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "galpts/error.hpp"

namespace galpts {

std::string StructureTag::to_string() const {
  switch (kind) {
    case StructureKind::kCyclic:
      return "cyclic " + std::to_string(order);
    case StructureKind::kDihedral:
      return "dihedral-of-order " + std::to_string(order);
    case StructureKind::kOther:
      break;
  }
  return "other of order " + std::to_string(order);
}

Subgroup::Subgroup(Field field, std::vector<Mobius> elements)
    : field_(std::move(field)), elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (elems_.empty()) throw DomainError("empty subgroup");
  for (const auto& g : elems_) {
    if (&g.ctx() != field_.get()) throw DomainError("field context mismatch");
  }
  if (!contains(Mobius::identity(*field_))) throw DomainError("subgroup lacks the identity");
  for (const auto& g : elems_) {
    if (!contains(g.inverse())) throw DomainError("subgroup not closed under inverses");
    for (const auto& h : elems_) {
      if (!contains(compose(g, h))) throw DomainError("subgroup not closed under composition");
    }
  }
  tag_ = structure_id(elems_);
}

bool Subgroup::contains(const Mobius& g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool Subgroup::meets_trivially(const Subgroup& o) const {
  for (const auto& g : elems_) {
    if (!g.is_identity() && o.contains(g)) return false;
  }
  return true;
}

std::optional<std::vector<Mobius>> try_closure(const std::vector<Mobius>& generators,
                                               std::uint64_t cap, std::uint64_t* work) {
  if (generators.empty()) throw DomainError("closure needs at least one generator");
  std::unordered_set<Mobius> seen;
  std::vector<Mobius> order;
  const Mobius id = Mobius::identity(generators.front().ctx());
  seen.insert(id);
  order.push_back(id);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& g : generators) {
      Mobius next = compose(g, order[i]);
      if (seen.insert(next).second) {
        order.push_back(next);
        if (work) ++*work;
        if (order.size() > cap) return std::nullopt;
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

Subgroup closure(const Field& field, const std::vector<Mobius>& generators, std::uint64_t cap) {
  auto elems = try_closure(generators, cap);
  if (!elems) throw BudgetError("generated group exceeds the order cap", cap);
  return Subgroup(field, std::move(*elems));
}

StructureTag structure_id(const std::vector<Mobius>& group) {
  const std::uint64_t n = group.size();
  std::vector<std::uint64_t> orders;
  orders.reserve(n);
  for (const auto& g : group) {
    const std::uint64_t k = order_of(g);
    if (k == n) return cyclic(n);
    orders.push_back(k);
  }
  if (n % 2 == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (orders[i] != n / 2) continue;
      const Mobius& r = group[i];
      std::vector<Mobius> rot{Mobius::identity(r.ctx())};
      while (rot.size() < n / 2) rot.push_back(compose(r, rot.back()));
      std::sort(rot.begin(), rot.end());
      const Mobius r_inv = r.inverse();
      for (std::size_t j = 0; j < n; ++j) {
        if (orders[j] != 2) continue;
        const Mobius& s = group[j];
        if (std::binary_search(rot.begin(), rot.end(), s)) continue;
        if (compose(s, compose(r, s)) == r_inv) return dihedral(n);
      }
    }
  }
  return {StructureKind::kOther, n};
}

std::vector<Point1> orbit_multiset(const Subgroup& g, const Point1& p, bool exclude_identity) {
  std::vector<Point1> out;
  for (const auto& sigma : g.elements()) {
    if (exclude_identity && sigma.is_identity()) continue;
    out.push_back(sigma(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mobius> pgl2_elements(const Field& field, std::uint32_t e) {
  const auto elems = field->enumerate(e);
  const auto zero = field->zero();
  const auto one = field->one();
  std::vector<Mobius> out;
  for (const auto& b : elems) {
    for (const auto& c : elems) {
      for (const auto& d : elems) {
        if (!(d - b * c).is_zero()) out.emplace_back(one, b, c, d);
      }
    }
  }
  for (const auto& c : elems) {
    if (c.is_zero()) continue;
    for (const auto& d : elems) out.emplace_back(zero, one, c, d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Mobius> find_conjugator(const Subgroup& h, const Subgroup& k,
                                      const std::vector<Mobius>& candidates) {
  if (h.order() != k.order()) return std::nullopt;
  for (const auto& g : candidates) {
    const Mobius gi = g.inverse();
    bool ok = true;
    for (const auto& x : h.elements()) {
      if (!k.contains(compose(g, compose(x, gi)))) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return std::nullopt;
}

Subgroup deck_group(const RatMap& f, std::uint32_t m, std::uint64_t cap) {
  if (!f.is_reduced()) throw DomainError("deck group needs a reduced map");
  const std::uint32_t d = f.form_degree();
  if (d < 2) throw DomainError("deck group needs a map of degree at least 2");
  const Field& field = f.field();

  // Fibers over F_{q^m}-rational values, in value enumeration order.
  std::map<Point1, std::vector<Point1>> fibers;
  for (const auto& p : projective_line(field, m)) fibers[f(p)].push_back(p);
  std::vector<const std::vector<Point1>*> split;
  for (const auto& [value, pts] : fibers) {
    if (pts.size() == d) split.push_back(&pts);
    if (split.size() == 2) break;
  }
  if (split.empty() || (d == 2 && split.size() < 2)) {
    throw UndecidedError("no totally split fiber over F_{q^" + std::to_string(m) + "}");
  }

  // Three source points and, for each, the fiber its image must lie in.
  std::array<Point1, 3> src{(*split[0])[0], (*split[0])[1],
                            d >= 3 ? (*split[0])[2] : (*split[1])[0]};
  std::array<const std::vector<Point1>*, 3> target{split[0], split[0],
                                                   d >= 3 ? split[0] : split[1]};
  const std::vector<Point1>& probe = split.size() > 1 ? *split[1] : *split[0];

  std::vector<Mobius> found;
  for (const auto& y0 : *target[0]) {
    for (const auto& y1 : *target[1]) {
      if (y1 == y0) continue;
      for (const auto& y2 : *target[2]) {
        if (y2 == y0 || y2 == y1) continue;
        const Mobius sigma = Mobius::from_three_points(src, {y0, y1, y2});
        bool ok = true;
        for (const auto& z : probe) {
          if (f(sigma(z)) != f(z)) {
            ok = false;
            break;
          }
        }
        if (!ok || !f.pullback(sigma).same_map(f)) continue;
        found.push_back(sigma);
        if (found.size() > cap) throw BudgetError("deck group exceeds the order cap", cap);
      }
    }
  }
  return Subgroup(field, std::move(found));
}

DeckResult deck_group_ladder(const RatMap& f, const std::vector<std::uint32_t>& ladder,
                             std::uint64_t cap) {
  const Field& base = f.field();
  std::string tried;
  for (std::uint32_t m : ladder) {
    try {
      if (base->m() % m == 0) return {deck_group(f, m, cap), m, f};
      const std::uint32_t target_m = std::lcm(base->m(), m);
      Field target = gf::make_field(base->p(), base->n(), target_m);
      const gf::Embedding emb(base, target);
      RatMap moved = embed(emb, f);
      return {deck_group(moved, m, cap), m, moved};
    } catch (const UndecidedError&) {
      tried += (tried.empty() ? "" : ",") + std::to_string(m);
    } catch (const ParameterError&) {
      tried += (tried.empty() ? "" : ",") + std::to_string(m) + "(too large)";
    }
  }
  throw UndecidedError("no totally split fiber over F_{q^m} for m in {" + tried + "}");
}

}  // namespace galpts
