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


#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "galpts/error.hpp"
#include "galpts/galois.hpp"

namespace galpts {

namespace {

using Keys = std::vector<std::array<std::uint32_t, 4>>;

Keys keys_of(const std::vector<Mobius>& elems) {
  Keys k;
  k.reserve(elems.size());
  for (const auto& g : elems) k.push_back(g.key());
  return k;
}

std::uint64_t stabilizer(const Subgroup& g, const Point1& p) {
  std::uint64_t n = 0;
  for (const auto& s : g.elements()) n += s(p) == p;
  return n;
}

Json points_json(const std::vector<Point1>& pts) {
  Json j = Json::array();
  for (const auto& p : pts) j.push_back(p.to_string());
  return j;
}

}  // namespace

PairCertificate problem_pair_check(const Subgroup& h1, const Subgroup& h2, const Point1& p1,
                                   const Point1& p2) {
  if (h1.field() != h2.field()) throw DomainError("field context mismatch");
  if (h1 == h2) throw ParameterError("H1 = H2: the subgroups must be different");
  if (p1 == p2) throw ParameterError("P1 = P2: the points must be different");
  if (p1.s().ctx() != h1.field().get() || p2.s().ctx() != h1.field().get()) {
    throw DomainError("field context mismatch");
  }
  PairCertificate c{h1, h2, p1, p2, false, false, {}, {}, 0, 0, 0};
  c.condition_a = h1.meets_trivially(h2);
  c.orbit_h1_p2 = orbit_multiset(h1, p2, true);
  c.orbit_h2_p1 = orbit_multiset(h2, p1, true);
  c.condition_b = c.orbit_h1_p2 == c.orbit_h2_p1;
  c.stabilizer_h1_p2 = stabilizer(h1, p2);
  c.stabilizer_h2_p1 = stabilizer(h2, p1);
  return c;
}

Json certificate_json(const PairCertificate& c) {
  Json j;
  j["H1"] = group_json(c.h1, true);
  j["H2"] = group_json(c.h2, true);
  j["P1"] = point_json(c.p1);
  j["P2"] = point_json(c.p2);
  j["condition_a"] = c.condition_a;
  j["condition_b"] = c.condition_b;
  j["orbit_H1_P2"] = points_json(c.orbit_h1_p2);
  j["orbit_H2_P1"] = points_json(c.orbit_h2_p1);
  j["stabilizer_H1_P2"] = c.stabilizer_h1_p2;
  j["stabilizer_H2_P1"] = c.stabilizer_h2_p1;
  if (c.passing_point_pairs) j["passing_point_pairs"] = c.passing_point_pairs;
  return j;
}

std::vector<Subgroup> small_subgroups(const Field& field, std::uint64_t max_order,
                                      std::uint64_t work_budget, bool* truncated) {
  if (max_order == 0) throw ParameterError("max order must be positive");
  std::uint64_t work = 0;
  bool cut = false;
  std::map<Keys, std::vector<Mobius>> found;
  // Cyclic subgroups, one generator each.
  std::vector<std::pair<Mobius, std::set<std::array<std::uint32_t, 4>>>> cyclic;
  for (const auto& g : pgl2_elements(field, 1)) {
    auto elems = try_closure({g}, max_order, &work);
    if (!elems) continue;
    Keys k = keys_of(*elems);
    if (found.emplace(k, *elems).second) cyclic.emplace_back(g, std::set(k.begin(), k.end()));
  }
  for (std::size_t i = 0; i < cyclic.size() && !cut; ++i) {
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      const auto& a = cyclic[i].second;
      const auto& b = cyclic[j].second;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end()) ||
          std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        continue;
      }
      if (work > work_budget) {
        cut = true;
        break;
      }
      auto elems = try_closure({cyclic[i].first, cyclic[j].first}, max_order, &work);
      if (elems) found.emplace(keys_of(*elems), std::move(*elems));
    }
  }
  if (truncated) *truncated = cut;
  std::vector<Subgroup> out;
  for (auto& [k, elems] : found) out.emplace_back(field, std::move(elems));
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

PairSearch problem_pair_search(std::uint64_t q, const PairSearchOptions& opt) {
  if (opt.work_budget == 0) throw ParameterError("work budget must be positive");
  const auto [p, n] = gf::split_prime_power(q);
  const Field field = gf::make_field(p, n, 1);
  PairSearch out;
  bool cut = false;
  const std::vector<Subgroup> groups = small_subgroups(field, opt.max_order, opt.work_budget, &cut);
  out.subgroups = groups.size();
  const std::vector<Point1> line = projective_line(field, 1);
  const std::uint64_t npts = line.size();

  // Orbit multisets of every subgroup at every point.
  std::vector<std::vector<std::vector<Point1>>> orbits(groups.size());
  std::uint64_t work = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto& pt : line) orbits[g].push_back(orbit_multiset(groups[g], pt, true));
    work += groups[g].order() * npts;
  }

  // Pairs of equal order, truncated at the work budget; the cost of a pair
  // is fixed in advance so the cut does not depend on scheduling.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < groups.size() && !cut; ++i) {
    if (groups[i].order() < 2) continue;
    for (std::size_t j = i + 1; j < groups.size() && groups[j].order() == groups[i].order(); ++j) {
      const std::uint64_t cost = groups[i].order() + npts * npts;
      if (work + cost > opt.work_budget) {
        cut = true;
        break;
      }
      work += cost;
      pairs.emplace_back(i, j);
    }
  }
  out.subgroup_pairs = pairs.size();
  out.work = work;

  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(opt.budget_seconds));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::vector<std::optional<PairCertificate>> results(pairs.size());
  auto run = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pairs.size() || stop.load()) return;
      if (opt.budget_seconds > 0 && Clock::now() > deadline) {
        stop = true;
        return;
      }
      const auto [i, j] = pairs[k];
      if (!groups[i].meets_trivially(groups[j])) continue;
      std::uint64_t count = 0;
      std::optional<std::pair<std::size_t, std::size_t>> first;
      for (std::size_t a = 0; a < npts; ++a) {
        for (std::size_t b = 0; b < npts; ++b) {
          if (a == b || orbits[i][b] != orbits[j][a]) continue;
          ++count;
          if (!first) first = {{a, b}};
        }
      }
      if (!first) continue;
      PairCertificate c = problem_pair_check(groups[i], groups[j], line[first->first], line[first->second]);
      c.passing_point_pairs = count;
      results[k] = std::move(c);
    }
  };
  const unsigned nw = std::max(1u, opt.workers);
  if (nw == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nw; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  out.truncated = cut || stop.load();
  for (auto& r : results) {
    if (r) out.certificates.push_back(std::move(*r));
  }
  return out;
}

}  // namespace galpts
