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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "galpts/cli.hpp"
#include "galpts/error.hpp"
#include "galpts/galois.hpp"

using namespace galpts;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = "failed: " + what;
    }
  }
};

Field field_for(std::uint64_t q, std::uint32_t m = 1) {
  const auto [p, n] = gf::split_prime_power(q);
  return gf::make_field(p, n, m);
}

std::string qs(std::uint64_t q) { return "q=" + std::to_string(q); }

Point2 coord(const Field& f, int i) {
  std::array<FieldElem, 3> c{f->zero(), f->zero(), f->zero()};
  c[i] = f->one();
  return Point2(c[0], c[1], c[2]);
}

std::vector<FieldElem> admissible(CurveLabel label, const Field& f) {
  std::vector<FieldElem> out;
  for (std::uint32_t i = 0; i < f->q(); ++i) {
    try {
      check_curve_parameters(label, f, f->from_fq_index(i));
      out.push_back(f->from_fq_index(i));
    } catch (const ParameterError&) {
    }
  }
  return out;
}

std::optional<Subgroup> deck(const CurveMap& phi, const Point2& p) {
  const GaloisVerdict v = is_galois_point(phi, p);
  if (!v.is_galois) return std::nullopt;
  return v.group;
}

bool galois_with(const CurveMap& phi, const Point2& p, PointKind kind, StructureTag tag) {
  const GaloisVerdict v = is_galois_point(phi, p);
  return v.kind == kind && v.is_galois && v.group_type == tag &&
         v.group->order() == v.projection_degree;
}

// Ramification of f over P^1(F_{q^2}), compared with the expected list.
bool ramified_exactly(const RatMap& f, std::vector<std::pair<Point1, std::uint32_t>> want) {
  const Field& base = f.field();
  const Field big = gf::make_field(base->p(), base->n(), 2 * base->m());
  const gf::Embedding emb(base, big);
  for (auto& [p, e] : want) p = Point1(emb(p.s()), emb(p.t()));
  std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return ramification_profile(embed(emb, f), 2 * base->m()) == want;
}

bool enumerates_exactly_p1_p2(const CurveMap& phi, PointKind kind, std::uint32_t e) {
  ScanOptions opt;
  opt.scan_ext = e;
  const Enumeration r = enumerate_galois_points(phi, kind, opt);
  if (r.galois.size() != 2 || r.truncated || !r.undecided.empty()) return false;
  const Field& f = r.galois[0].point[0].ctx()->shared_from_this();
  return r.galois[0].point == coord(f, 1) && r.galois[1].point == coord(f, 0);
}

// Criterion 1.
Result lemma_suite() {
  Result o;
  for (std::uint64_t q : {5u, 7u, 9u, 13u, 25u}) {
    const Field f = field_for(q);
    const Subgroup h = closure(f, {lemma_sigma(f), lemma_tau(f)}, 4 * q);
    o.require(h.order() == q - 1 && h.tag() == dihedral(q - 1), qs(q) + " <σ,τ> is not D_{q-1}");
    o.require(verify_invariant(lemma_f(f), h), qs(q) + " f not invariant");
    o.require(order_of(lemma_eta(f)) == q - 1, qs(q) + " η has the wrong order");
    o.require(verify_invariant(lemma_g(f), closure(f, {lemma_eta(f)}, 4 * q)), qs(q) + " g not invariant");
  }
  return o;
}

// Criterion 2.
Result theorem1() {
  Result o;
  for (std::uint64_t q : {5u, 7u, 9u}) {
    const Field f = field_for(q);
    const std::uint32_t k = static_cast<std::uint32_t>((q + 1) / 2), h = static_cast<std::uint32_t>((q - 1) / 2);
    const CurveMap phi = make_curve(CurveLabel::kC1, f);
    const Point2 p1 = coord(f, 1), p2 = coord(f, 0), qq = coord(f, 2);
    o.require(project(phi, p1).form_degree() == q - 1 && project(phi, p2).form_degree() == q - 1,
              qs(q) + " projection degrees");
    o.require(galois_with(phi, p1, PointKind::kInner, dihedral(q - 1)), qs(q) + " P1 group");
    o.require(galois_with(phi, p2, PointKind::kInner, cyclic(q - 1)), qs(q) + " P2 group");
    o.require(multiplicity_at(phi, qq) == h, qs(q) + " multiplicity at Q");
    o.require(ramified_exactly(project(phi, qq), {{Point1::affine(f->zero()), k},
                                                  {Point1::infinity(*f), h},
                                                  {Point1::affine(-f->one()), 2}}),
              qs(q) + " ramification of π_Q");
    if (q <= 7) {
      o.require(enumerates_exactly_p1_p2(phi, PointKind::kInner, 2), qs(q) + " inner enumeration over F_{q^2}");
    }
  }
  o.detail = o.ok ? "q=5,7,9; enumeration over F_{q^2}-points only (finite-rational restriction)" : o.detail;
  return o;
}

// Criterion 3.
Result theorem2() {
  Result o;
  for (std::uint64_t q : {5u, 7u, 9u}) {
    const Field f = field_for(q);
    const std::uint32_t k = static_cast<std::uint32_t>((q + 1) / 2);
    const CurveMap phi = make_curve(CurveLabel::kC2, f);
    o.require(galois_with(phi, coord(f, 1), PointKind::kInner, dihedral(q - 1)), qs(q) + " P1 group");
    o.require(galois_with(phi, coord(f, 0), PointKind::kInner, dihedral(q - 1)), qs(q) + " P2 group");
    const RatMap pq = project(phi, coord(f, 2));
    const DeckResult d = deck_group_ladder(pq, default_ladder(), pq.form_degree());
    o.require(pq.form_degree() == k && d.group.tag() == cyclic(k), qs(q) + " π_Q not cyclic of order (q+1)/2");
    o.require(ramified_exactly(pq, {{Point1::affine(f->zero()), k}, {Point1::affine(f->one()), k}}),
              qs(q) + " ramification of π_Q");
  }
  o.require(enumerates_exactly_p1_p2(make_curve(CurveLabel::kC2, field_for(5)), PointKind::kInner, 2),
            "q=5 inner enumeration over F_25");
  o.detail = o.ok ? "q=5,7,9; enumeration over F_25-points only (finite-rational restriction)" : o.detail;
  return o;
}

// Criterion 4.
Result theorem3() {
  Result o;
  std::string swept;
  for (std::uint64_t q : {5u, 7u}) {
    const Field f = field_for(q);
    for (const FieldElem& g : admissible(CurveLabel::kC3, f)) {
      const std::string at = qs(q) + " γ=" + g.to_string();
      swept += (swept.empty() ? "" : ", ") + at;
      const CurveMap phi = make_curve(CurveLabel::kC3, f, g);
      o.require(verify_identities(CurveLabel::kC3, f, g).all_pass(), at + " identity");
      o.require(diff_rank_check(phi), at + " diff rank");
      std::set<Point1> flexes;
      for (const auto& x : hessian_flexes(phi, 1)) flexes.insert(x.source);
      const std::set<Point1> want{Point1::infinity(*f), Point1::affine(f->zero()),
                                  Point1::affine(-f->one()), Point1::affine(g)};
      o.require(flexes == want, at + " flexes");
      o.require(galois_with(phi, coord(f, 1), PointKind::kOuter, dihedral(q + 1)), at + " P1 group");
      o.require(galois_with(phi, coord(f, 0), PointKind::kOuter, cyclic(q + 1)), at + " P2 group");
      o.require(enumerates_exactly_p1_p2(phi, PointKind::kOuter, 1), at + " outer enumeration");
    }
  }
  if (o.ok) o.detail = swept + "; enumeration over P^2(F_q) only (finite-rational restriction)";
  return o;
}

// Criterion 5.
Result theorem4() {
  Result o;
  std::string swept;
  for (std::uint64_t q : {7u, 9u}) {
    const Field f = field_for(q);
    for (const FieldElem& g : admissible(CurveLabel::kC4, f)) {
      const std::string at = qs(q) + " γ=" + g.to_string();
      swept += (swept.empty() ? "" : ", ") + at;
      const FieldElem k = f->from_int(static_cast<std::int64_t>((q + 1) / 2));
      o.require(!(g + g).is_zero() && !(k * (g + f->one())).is_zero(), at + " coefficients vanish");
      o.require(verify_identities(CurveLabel::kC4, f, g).all_pass(), at + " identity");
      o.require(verify_coordinate_change(f, g), at + " coordinate change");
      const CurveMap phi = make_curve(CurveLabel::kC4, f, g);
      o.require(galois_with(phi, coord(f, 1), PointKind::kOuter, dihedral(q + 1)), at + " P1 group");
      o.require(galois_with(phi, coord(f, 0), PointKind::kOuter, dihedral(q + 1)), at + " P2 group");
    }
  }
  if (o.ok) o.detail = swept;
  return o;
}

// Criterion 6.
Result problem_search() {
  Result o;
  const Field f = field_for(5);
  const CurveMap c1 = make_curve(CurveLabel::kC1, f);
  const auto a = deck(c1, coord(f, 1));
  const auto b = deck(c1, coord(f, 0));
  if (!a || !b) {
    o.require(false, "deck groups of C1");
    return o;
  }
  const Field& big = a->field();
  const gf::Embedding emb(f, big);
  const PairSearch s = problem_pair_search(5, {});
  o.require(!s.truncated, "search truncated");
  std::string found;
  const auto conjugators = pgl2_elements(f, 1);
  for (const auto& c : s.certificates) {
    const PairCertificate again = problem_pair_check(c.h1, c.h2, c.p1, c.p2);
    o.require(again.condition_a && again.condition_b, "re-check of a certificate");
    if (!found.empty() || c.h1.order() != 4) continue;
    const Subgroup h1 = embed(emb, c.h1), h2 = embed(emb, c.h2);
    for (const auto& g : conjugators) {
      const Mobius ge(emb(g.a()), emb(g.b()), emb(g.c()), emb(g.d()));
      auto onto = [&](const Subgroup& from, const Subgroup& to) {
        for (const auto& x : from.elements()) {
          if (!to.contains(compose(ge, compose(x, ge.inverse())))) return false;
        }
        return true;
      };
      const bool straight = onto(h1, *a) && onto(h2, *b);
      const bool swapped = onto(h1, *b) && onto(h2, *a);
      if (!straight && !swapped) continue;
      o.require(c.orbit_h1_p2.size() == 3 && c.orbit_h2_p1.size() == 3, "multiset sizes");
      found = std::string(g.is_identity() ? "set-equal" : "conjugate by " + g.to_string()) +
              ", P1 = " + c.p1.to_string() + ", P2 = " + c.p2.to_string();
      break;
    }
  }
  o.require(!found.empty(), "no certificate matches the C1 deck groups");
  if (o.ok) {
    o.detail = std::to_string(s.certificates.size()) + " certificates re-checked; C1 pair " + found;
  }
  return o;
}

// Criterion 7 helpers: each property over one case, returning false on violation.

bool fiber_conservation(const RatMap& m0, const std::vector<Point1>& line) {
  const RatMap m = m0.reduced();
  const std::uint32_t d = m.form_degree();
  if (d == 0) return true;
  for (const auto& c : line) {
    const Form fib = m.fiber_form(c);
    std::uint32_t rational = 0, total = 0, closure = 0;
    for (const auto& p : line) {
      if (m(p) == c) rational += m.vanishing_order(p);
    }
    for (const auto& [p, e] : fib.roots(1)) total += e;
    for (auto e : fib.multiplicity_profile()) closure += e;
    if (rational != total || closure != d) return false;
  }
  return true;
}

bool reduction_idempotent(const RatMap& m) {
  const RatMap r = m.reduced();
  return r.is_reduced() && r.reduced().num() == r.num() && r.reduced().den() == r.den() &&
         r.same_map(m);
}

bool leibniz(const Poly& a, const Poly& b) {
  if (!(derivative(a * b) == derivative(a) * b + a * derivative(b))) return false;
  if (b.is_zero()) return true;
  const auto [quo, rem] = a.divmod(b);
  return quo * b + rem == a && rem.degree() < b.degree();
}

bool contravariant(const RatMap& m, const Mobius& s, const Mobius& r, const Point1& p) {
  const RatMap lhs = m.pullback(compose(s, r));
  return lhs.same_map(m.pullback(s).pullback(r)) && lhs(p) == m(s(r(p)));
}

std::vector<Form> all_forms(const Field& f, std::uint32_t d) {
  const auto el = f->enumerate(1);
  std::vector<Form> out;
  std::vector<std::size_t> idx(d + 1, 0);
  for (;;) {
    std::vector<FieldElem> c;
    for (auto i : idx) c.push_back(el[i]);
    out.emplace_back(f, d, c);
    std::size_t j = 0;
    while (j <= d && ++idx[j] == el.size()) idx[j++] = 0;
    if (j > d) return out;
  }
}

struct Counter {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  void add(bool ok) {
    ++cases;
    if (!ok) ++failures;
  }
};

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "galpts");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

Result properties() {
  Result o;
  std::ostringstream detail;

  // q = 5: exhaustive over small domains.
  {
    const Field f = field_for(5);
    const auto line = projective_line(f, 1);
    const auto forms = all_forms(f, 2);
    Counter fiber, reduce, leib, contra;
    for (const auto& a : forms) {
      for (const auto& b : forms) {
        if (a.is_zero() && b.is_zero()) continue;
        const RatMap m(a, b);
        fiber.add(fiber_conservation(m, line));
        reduce.add(reduction_idempotent(m));
        leib.add(leibniz(a.chart_t(), b.chart_t()));
      }
    }
    const RatMap test_map(Form(f, 3, {f->one(), f->zero(), f->from_int(2), f->one()}),
                          Form(f, 3, {f->zero(), f->one(), f->zero(), f->from_int(3)}));
    const auto group = pgl2_elements(f, 1);
    for (const auto& s : group) {
      for (const auto& r : group) contra.add(contravariant(test_map, s, r, line[contra.cases % line.size()]));
    }
    for (const auto* c : {&fiber, &reduce, &leib, &contra}) {
      o.require(c->failures == 0, "q=5 exhaustive property");
    }
    detail << "q=5 exhaustive: " << fiber.cases << " maps, " << leib.cases << " poly pairs, " << contra.cases
           << " group pairs";
  }

  // q = 7, 9: fixed seeds, 1000 cases per property.
  for (std::uint64_t q : {7u, 9u}) {
    const Field f = field_for(q);
    const auto line = projective_line(f, 1);
    const auto el = f->enumerate(1);
    std::mt19937 rng(20260000u + static_cast<unsigned>(q));
    std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
    std::uniform_int_distribution<std::uint32_t> deg(1, 5);
    auto form = [&](std::uint32_t d) {
      std::vector<FieldElem> c;
      for (std::uint32_t i = 0; i <= d; ++i) c.push_back(el[pick(rng)]);
      return Form(f, d, c);
    };
    auto map = [&] {
      const std::uint32_t d = deg(rng);
      for (;;) {
        Form a = form(d), b = form(d);
        if (!(a.is_zero() && b.is_zero())) return RatMap(a, b);
      }
    };
    auto mobius = [&] {
      for (;;) {
        const FieldElem a = el[pick(rng)], b = el[pick(rng)], c = el[pick(rng)], d = el[pick(rng)];
        if (!(a * d - b * c).is_zero()) return Mobius(a, b, c, d);
      }
    };
    Counter fiber, reduce, leib, contra;
    for (int i = 0; i < 1000; ++i) {
      fiber.add(fiber_conservation(map(), line));
      const Form common = form(static_cast<std::uint32_t>(i % 3));
      const RatMap base = map();
      if (!common.is_zero()) reduce.add(reduction_idempotent(RatMap(base.num() * common, base.den() * common)));
      else reduce.add(reduction_idempotent(base));
      leib.add(leibniz(form(deg(rng)).chart_t(), form(deg(rng)).chart_t()));
      contra.add(contravariant(map().reduced(), mobius(), mobius(), line[i % line.size()]));
    }
    for (const auto* c : {&fiber, &reduce, &leib, &contra}) {
      o.require(c->failures == 0 && c->cases >= 1000, qs(q) + " sampled property");
    }
  }
  detail << "; q=7,9: 1000 seeded cases per property";

  // Deterministic output across runs and worker counts.
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"verify", "--theorem", "1", "--q", "7", "--format", "json"},
           {"verify", "--theorem", "3", "--q", "5", "--gamma", "2", "--format", "json"},
           {"enumerate", "--curve", "c3", "--q", "7", "--gamma", "3", "--kind", "outer"},
           {"search-pairs", "--q", "5", "--max-order", "8", "--format", "json"}}) {
    auto one = base, many = base;
    one.insert(one.end(), {"--deterministic", "--workers", "1"});
    many.insert(many.end(), {"--deterministic", "--workers", "4"});
    const std::string x = run_cli(one);
    o.require(x == run_cli(one) && x == run_cli(many), "deterministic output of " + base[0]);
  }
  detail << "; deterministic output identical for workers 1 and 4";
  if (o.ok) o.detail = detail.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"lemma suite for q in {5, 7, 9, 13, 25}", lemma_suite},
      {"Theorem 1 at q in {5, 7, 9}", theorem1},
      {"Theorem 2 at q in {5, 7, 9}", theorem2},
      {"Theorem 3 at q in {5, 7}, all admissible γ", theorem3},
      {"Theorem 4 at q in {7, 9}, all admissible γ", theorem4},
      {"pair search at q = 5 rediscovers the C1 deck groups", problem_search},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Result o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (i == 0 && secs >= 10) {
      o.ok = false;
      o.detail = "runtime budget of 10 s exceeded";
    }
    if (!o.ok) ++failed;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " | " << o.detail;
    std::cout << " | " << t.str() << " s" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
