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


// Galois points of the curves: decision, invariant checks, per-theorem
// reports, enumeration, and the subgroup-pair problem.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galpts/curve.hpp"
#include "galpts/pgl2.hpp"
#include "galpts/report.hpp"

namespace galpts {

enum class PointKind { kInner, kOuter, kIneligible };

std::string to_string(PointKind k);
std::optional<PointKind> parse_point_kind(const std::string& s);

struct GaloisVerdict {
  Point2 point;
  PointKind kind = PointKind::kIneligible;
  std::uint32_t multiplicity = 0;  // degree drop; 0 off the curve
  std::uint32_t projection_degree = 0;
  bool is_galois = false;
  std::optional<Subgroup> group;   // deck group; absent for ineligible points
  StructureTag group_type;
  std::uint32_t extension_used = 0;
};

/// {m, 2m, 3m}.
std::vector<std::uint32_t> ladder_from(std::uint32_t m);

/// Classifies P by multiplicity (0 outer, 1 inner, otherwise ineligible) and,
/// for eligible points, decides Galois-ness as |deck group| = projection
/// degree. Throws UndecidedError when the ladder is exhausted.
GaloisVerdict is_galois_point(const CurveMap& phi, const Point2& p,
                              const std::vector<std::uint32_t>& ladder = default_ladder());

Json verdict_json(const GaloisVerdict& v);

/// fn∘sigma = fn for every sigma in G. fn is moved into G's field when the
/// contexts differ.
bool verify_invariant(const RatMap& fn, const Subgroup& g);

// The maps and invariant functions of the dihedral and cyclic lemmas, with
// alpha the primitive element of F_q.
Mobius lemma_sigma(const Field& field);  // diag(1, alpha^2)
Mobius lemma_tau(const Field& field);    // [[0, 1], [alpha, 0]]
Mobius lemma_eta(const Field& field);    // [[1, 0], [alpha - 1, alpha]]
/// f(s) = s^h - s^-h as (s^(q-1) - t^(q-1) : s^h t^h), h = (q-1)/2.
RatMap lemma_f(const Field& field);
/// g(s) = (s - 1)/(s^q - s) as ((s - t) t^(q-1) : s^q - s t^(q-1)).
RatMap lemma_g(const Field& field);

/// s^k + c s^-k as (s^(q+1) + c t^(q+1) : s^k t^k), k = (q+1)/2.
RatMap power_invariant(const Field& field, const FieldElem& c);

/// Group generated by s -> zeta s (zeta of order k) and s -> delta/s with
/// delta^k = c, inside `field` (which must contain both).
Subgroup power_invariant_group(const Field& field, const FieldElem& c);

/// Expansion checks of the polynomial identities behind Theorems 3 and 4.
/// gamma is taken as given, so forbidden values produce failing lines.
Report verify_identities(CurveLabel label, const Field& field, const FieldElem& gamma);

/// Projection of C4 from (1:0:0) in the coordinate u = (s + gamma)/(s + 1)
/// equals (u^k : (u^(q+1) - gamma)/(1 - gamma)), the reciprocal of
/// (u^(q+1) - gamma : u^k) up to the scalar 1 - gamma.
bool verify_coordinate_change(const Field& field, const FieldElem& gamma);

struct ScanOptions {
  std::uint32_t scan_ext = 1;
  std::vector<std::uint32_t> deck_ladder = default_ladder();
  std::uint64_t budget_points = 20000;
  double budget_seconds = 0;  // 0: no time limit
  unsigned workers = 1;
};

struct Enumeration {
  std::vector<GaloisVerdict> galois;  // Galois points in point order
  std::uint64_t candidates = 0;
  std::uint64_t pruned = 0;            // rejected by the ramification pre-filter
  std::uint64_t deck_checked = 0;
  std::vector<Point2> undecided;
  bool truncated = false;              // time budget hit
};

/// Number of candidate points a scan would visit.
std::uint64_t enumeration_size(const CurveMap& phi, PointKind kind, std::uint32_t scan_ext);

/// Galois points of the requested kind among P^2(F_{q^e}). Inner candidates
/// are images of P^1(F_{q^e}) with multiplicity 1, outer candidates are the
/// points off the curve. Candidates with non-uniform ramification over some
/// F_{q^e}-rational value are pruned; every other candidate gets the full
/// deck-group test. Throws BudgetError when the candidate count exceeds the
/// point budget.
Enumeration enumerate_galois_points(const CurveMap& phi, PointKind kind, const ScanOptions& opt);

struct PairCertificate {
  Subgroup h1, h2;
  Point1 p1, p2;
  bool condition_a = false;
  bool condition_b = false;
  std::vector<Point1> orbit_h1_p2;  // sigma(P2), sigma in H1 \ {1}
  std::vector<Point1> orbit_h2_p1;  // tau(P1), tau in H2 \ {1}
  std::uint64_t stabilizer_h1_p2 = 0;
  std::uint64_t stabilizer_h2_p1 = 0;
  std::uint64_t passing_point_pairs = 0;  // search only: pairs (P1, P2) meeting (b)
};

/// Evaluates both conditions. Throws ParameterError for equal subgroups or
/// equal points.
PairCertificate problem_pair_check(const Subgroup& h1, const Subgroup& h2, const Point1& p1,
                                   const Point1& p2);

Json certificate_json(const PairCertificate& c);

struct PairSearchOptions {
  std::uint64_t max_order = 8;
  std::uint64_t work_budget = 2000000;
  double budget_seconds = 0;
  unsigned workers = 1;
};

struct PairSearch {
  std::vector<PairCertificate> certificates;
  std::uint64_t subgroups = 0;
  std::uint64_t subgroup_pairs = 0;
  std::uint64_t work = 0;
  bool truncated = false;
};

/// Subgroups of PGL(2, F_q) generated by one or two elements with order at
/// most max_order, deduplicated as sets; every pair of equal order meeting
/// (a) is scanned over P^1(F_q)^2 and reported with its first passing point
/// pair. Output order is deterministic.
PairSearch problem_pair_search(std::uint64_t q, const PairSearchOptions& opt);

/// All subgroups the search would consider, sorted by order then elements.
std::vector<Subgroup> small_subgroups(const Field& field, std::uint64_t max_order,
                                      std::uint64_t work_budget, bool* truncated);

Subgroup embed(const gf::Embedding& emb, const Subgroup& g);

struct TheoremOptions {
  bool enumerate = true;
  ScanOptions scan{0};  // scan_ext 0 selects the default for the theorem
};

/// Claims of Theorem n (1..4) for the given q and gamma index. Invalid
/// parameters yield a single invalid precondition claim.
Report theorem_report(int n, std::uint64_t q, std::optional<std::uint32_t> gamma_index,
                      const TheoremOptions& opt = {});

}  // namespace galpts
