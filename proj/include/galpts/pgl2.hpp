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

// Finite subgroups of PGL(2, F_{q^m}) and deck groups of maps P^1 -> P^1.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galpts/mobius.hpp"
#include "galpts/rational_map.hpp"

namespace galpts {

enum class StructureKind { kCyclic, kDihedral, kOther };

/// Isomorphism-type tag. Dihedral groups are named by their order, so the
/// Klein four group is dihedral-of-order 4.
struct StructureTag {
  StructureKind kind = StructureKind::kOther;
  std::uint64_t order = 0;

  std::string to_string() const;
  friend bool operator==(const StructureTag&, const StructureTag&) = default;
};

inline StructureTag cyclic(std::uint64_t n) { return {StructureKind::kCyclic, n}; }
inline StructureTag dihedral(std::uint64_t n) { return {StructureKind::kDihedral, n}; }

/// Explicit finite subgroup; elements kept sorted by Mobius::key().
class Subgroup {
 public:
  /// Throws DomainError unless the set contains 1 and is closed under
  /// composition and inverses.
  Subgroup(Field field, std::vector<Mobius> elements);

  const Field& field() const { return field_; }
  const std::vector<Mobius>& elements() const { return elems_; }
  std::uint64_t order() const { return elems_.size(); }
  bool contains(const Mobius& g) const;
  const StructureTag& tag() const { return tag_; }

  /// H ∩ K = {1}.
  bool meets_trivially(const Subgroup& o) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems_ == b.elems_; }

 private:
  Field field_;
  std::vector<Mobius> elems_;
  StructureTag tag_;
};

/// Breadth-first closure; nullopt once more than cap elements appear.
/// When work is given it is incremented by the number of elements produced.
std::optional<std::vector<Mobius>> try_closure(const std::vector<Mobius>& generators,
                                               std::uint64_t cap, std::uint64_t* work = nullptr);

/// Generated subgroup; throws BudgetError when its order exceeds cap.
Subgroup closure(const Field& field, const std::vector<Mobius>& generators, std::uint64_t cap);

StructureTag structure_id(const std::vector<Mobius>& group);

/// One image per group element considered, sorted.
std::vector<Point1> orbit_multiset(const Subgroup& g, const Point1& p, bool exclude_identity);

/// All elements of PGL(2, F_{q^e}) inside the context, sorted by key.
std::vector<Mobius> pgl2_elements(const Field& field, std::uint32_t e);

/// Some g in `candidates` with g H g^{-1} = K, if any.
std::optional<Mobius> find_conjugator(const Subgroup& h, const Subgroup& k,
                                      const std::vector<Mobius>& candidates);

/// All sigma in PGL(2, F_{q^m}) with f∘sigma = f. Candidates come from a
/// totally split fiber over F_{q^m}; every candidate is verified symbolically.
/// Throws UndecidedError when no such fiber exists (m too small) and
/// BudgetError when more than cap elements are found.
Subgroup deck_group(const RatMap& f, std::uint32_t m, std::uint64_t cap);

struct DeckResult {
  Subgroup group;
  std::uint32_t extension_used;  // m with the group computed over F_{q^m}
  RatMap map;                    // f transported into the group's field
};

/// deck_group over the first rung of the ladder that has a totally split
/// fiber, moving f into a larger field when needed. Throws UndecidedError
/// once the ladder is exhausted.
DeckResult deck_group_ladder(const RatMap& f, const std::vector<std::uint32_t>& ladder,
                             std::uint64_t cap);

inline const std::vector<std::uint32_t>& default_ladder() {
  static const std::vector<std::uint32_t> ladder{2, 4, 6};
  return ladder;
}

}  // namespace galpts
