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


#include <doctest.h>

#include <map>
#include <random>

#include "galpts/error.hpp"
#include "galpts/pgl2.hpp"
#include "support.hpp"

using namespace galpts;
using namespace galpts::testing;

namespace {

std::vector<Point1> affine_points(const Field& f, std::initializer_list<std::int64_t> vals) {
  std::vector<Point1> out;
  for (auto v : vals) out.push_back(pt(f, v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("Mobius action follows the row-vector convention") {
  auto f = prime_field(5);
  // (1, 1) A_tau = (alpha, 1) with alpha = 2
  CHECK(tau(f)(pt(f, 1)) == pt(f, 2));
  CHECK(sigma(f)(pt(f, 1)) == pt(f, 4));
  CHECK(eta(f)(pt(f, 0)) == pt(f, 3));
  CHECK(tau(f)(pt(f, 0)) == inf(f));
  CHECK_THROWS_AS(mob(f, 1, 2, 2, 4), DomainError);
  CHECK(mob(f, 2, 0, 0, 2).is_identity());
}

TEST_CASE("orders of the lemma maps") {
  for (std::uint64_t q : {5u, 7u, 9u, 11u, 13u}) {
    auto f = field_for(q);
    CHECK(order_of(eta(f)) == q - 1);
    CHECK(order_of(tau(f)) == 2);
    CHECK(order_of(sigma(f)) == (q - 1) / 2);
  }
  CHECK(order_of(Mobius::identity(*prime_field(5))) == 1);
}

TEST_CASE("from_three_points and fixed points") {
  auto f = prime_field(7);
  const std::array<Point1, 3> x{pt(f, 0), pt(f, 1), inf(f)};
  const std::array<Point1, 3> y{pt(f, 3), pt(f, 5), pt(f, 6)};
  const Mobius m = Mobius::from_three_points(x, y);
  for (int i = 0; i < 3; ++i) CHECK(m(x[i]) == y[i]);
  CHECK_THROWS_AS(Mobius::from_three_points({x[0], x[0], x[2]}, y), DomainError);

  const auto fp = fixed_points(eta(f));
  CHECK_FALSE(fp.everything);
  CHECK(fp.points == std::vector<Point1>{pt(f, 1), inf(f)});
  CHECK(fixed_points(Mobius::identity(*f)).everything);
  // s -> -1/s has fixed points s^2 = -1, not in F_7
  const auto fp2 = fixed_points(mob(f, 0, 1, -1, 0));
  CHECK(fp2.points.empty());
  CHECK(fp2.in_extension);
}

TEST_CASE("closures and structure tags at q = 5") {
  auto f = prime_field(5);
  const Subgroup h1 = closure(f, {sigma(f), tau(f)}, 100);
  const Subgroup h2 = closure(f, {eta(f)}, 100);
  CHECK(h1.order() == 4);
  CHECK(h2.order() == 4);
  CHECK(h1.tag() == dihedral(4));
  CHECK(h2.tag() == cyclic(4));
  CHECK(h1.tag().to_string() == "dihedral-of-order 4");
  CHECK(h2.tag().to_string() == "cyclic 4");
  const Subgroup triv = closure(f, {Mobius::identity(*f)}, 100);
  CHECK(triv.order() == 1);
  CHECK(triv.tag() == cyclic(1));
  CHECK(h1.meets_trivially(h2));
  CHECK_THROWS_AS(closure(f, {sigma(f), tau(f), eta(f)}, 10), BudgetError);
  CHECK_THROWS_AS(Subgroup(f, {sigma(f)}), DomainError);
}

TEST_CASE("orbit multisets at q = 5") {
  auto f = prime_field(5);
  const Subgroup h1 = closure(f, {sigma(f), tau(f)}, 100);
  const Subgroup h2 = closure(f, {eta(f)}, 100);
  CHECK(orbit_multiset(h1, pt(f, 1), true) == affine_points(f, {2, 3, 4}));
  CHECK(orbit_multiset(h2, pt(f, 0), true) == affine_points(f, {2, 3, 4}));
  CHECK(orbit_multiset(h2, pt(f, 0), false).size() == 4);
  const Subgroup triv = closure(f, {Mobius::identity(*f)}, 100);
  CHECK(orbit_multiset(triv, pt(f, 0), true).empty());
}

TEST_CASE("lemma groups for larger q") {
  for (std::uint64_t q : {7u, 9u, 11u, 13u}) {
    auto f = field_for(q);
    const Subgroup h1 = closure(f, {sigma(f), tau(f)}, 1000);
    const Subgroup h2 = closure(f, {eta(f)}, 1000);
    CHECK(h1.tag() == dihedral(q - 1));
    CHECK(h2.tag() == cyclic(q - 1));
  }
}

TEST_CASE("order equals closure size (property)") {
  for (std::uint64_t q : {7u, 9u}) {
    auto f = field_for(q);
    const auto all = pgl2_elements(f, 1);
    CHECK(all.size() == (q * q - 1) * q);
    std::mt19937 rng(41 + static_cast<unsigned>(q));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      const Mobius& g = all[pick(rng)];
      const Subgroup c = closure(f, {g}, q + 1);
      REQUIRE(order_of(g) == c.order());
      REQUIRE(c.tag() == cyclic(c.order()));
      REQUIRE(compose(g, g.inverse()).is_identity());
    }
  }
}

TEST_CASE("structure_id on non-cyclic, non-dihedral groups") {
  // PGL(2, F_5) itself has order 120 and is S_5.
  auto f = prime_field(5);
  const Subgroup g(f, pgl2_elements(f, 1));
  CHECK(g.order() == 120);
  CHECK(g.tag().kind == StructureKind::kOther);
  CHECK(g.tag().to_string() == "other of order 120");
}

TEST_CASE("deck groups of the C1 projections at q = 5") {
  auto f = prime_field(5);
  // pi_{P1} o phi_1 reduced: (s^2 t^2 : s^4 - t^4)
  const RatMap p1(mono(f, 2, 2), mono(f, 4, 0) - mono(f, 0, 4));
  const Subgroup g1 = deck_group(p1, 1, 100);
  CHECK(g1 == closure(f, {sigma(f), tau(f)}, 100));
  CHECK(g1.tag() == dihedral(4));
  const auto r1 = deck_group_ladder(p1, default_ladder(), 100);
  CHECK(r1.extension_used == 2);
  CHECK(r1.group.order() == 4);
  CHECK(r1.group.tag() == dihedral(4));

  // pi_{P2} o phi_1 up to PGL(2): (s^5 - s t^4 : (s - t) t^4) reduced.
  const RatMap p2 =
      RatMap(mono(f, 5, 0) - mono(f, 1, 4), Form::linear(f->one(), -f->one()) * mono(f, 0, 4))
          .reduced();
  CHECK(p2.form_degree() == 4);
  const Subgroup g2 = deck_group(p2, 1, 100);
  CHECK(g2 == closure(f, {eta(f)}, 100));
  CHECK(g2.tag() == cyclic(4));

  // Transport into F_25 preserves the group.
  auto f25 = prime_field(5, 2);
  const gf::Embedding emb(f, f25);
  const Subgroup g1e = deck_group(embed(emb, p1), 2, 100);
  CHECK(g1e.order() == 4);
  for (const auto& g : g1.elements()) {
    const auto& e = g.entries();
    CHECK(g1e.contains(Mobius(emb(e[0]), emb(e[1]), emb(e[2]), emb(e[3]))));
  }
}

TEST_CASE("deck group of the C2 projection from Q at q = 5") {
  auto f = prime_field(5);
  const RatMap m(mono(f, 3, 0), Form::linear(f->one(), -f->one()).pow(3));
  const auto r = deck_group_ladder(m, default_ladder(), 100);
  CHECK(r.group.order() == 3);
  CHECK(r.group.tag() == cyclic(3));
}

TEST_CASE("deck group acts simply transitively on split fibers of Galois maps") {
  auto f = prime_field(5);
  const RatMap p1(mono(f, 2, 2), mono(f, 4, 0) - mono(f, 0, 4));
  const Subgroup g = deck_group(p1, 1, 100);
  REQUIRE(g.order() == p1.form_degree());
  std::map<Point1, std::vector<Point1>> fibers;
  for (const auto& p : projective_line(f, 1)) fibers[p1(p)].push_back(p);
  int split = 0;
  for (const auto& [c, pts] : fibers) {
    if (pts.size() != p1.form_degree()) continue;
    ++split;
    std::vector<Point1> orbit;
    for (const auto& s : g.elements()) orbit.push_back(s(pts[0]));
    std::sort(orbit.begin(), orbit.end());
    CHECK(orbit == pts);
  }
  CHECK(split > 0);
}

TEST_CASE("deck group of a non-Galois map is smaller than the degree") {
  auto f = prime_field(7);
  // s^3 + s over F_7 has trivial deck group generically
  const RatMap m(mono(f, 3, 0) + mono(f, 1, 2), mono(f, 0, 3));
  const auto r = deck_group_ladder(m, default_ladder(), 100);
  CHECK(r.group.order() < 3);
}

TEST_CASE("find_conjugator") {
  auto f = prime_field(5);
  const Subgroup a = closure(f, {eta(f)}, 100);
  const Mobius g = mob(f, 1, 2, 0, 1);
  const Mobius gi = g.inverse();
  std::vector<Mobius> conj;
  for (const auto& x : a.elements()) conj.push_back(compose(g, compose(x, gi)));
  const Subgroup b(f, conj);
  const auto c = find_conjugator(a, b, pgl2_elements(f, 1));
  REQUIRE(c.has_value());
  for (const auto& x : a.elements()) CHECK(b.contains(compose(*c, compose(x, c->inverse()))));
}
