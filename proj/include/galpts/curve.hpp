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


// The parametrized plane curves C1..C4 and the analysis run on them:
// projections from points, degree drop, ramification, differential rank,
// Hessian flexes and line intersections.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galpts/projective.hpp"
#include "galpts/rational_map.hpp"

namespace galpts {

enum class CurveLabel { kC1, kC2, kC3, kC4, kCustom };

std::string to_string(CurveLabel label);
/// "c1".."c4"; nullopt otherwise.
std::optional<CurveLabel> parse_curve_label(const std::string& s);

/// Coefficients (a, b, c) of the line aX + bY + cZ = 0.
using Line = std::array<FieldElem, 3>;

/// Morphism P^1 -> P^2 given by three forms of common degree with no common
/// factor.
class CurveMap {
 public:
  CurveMap(CurveLabel label, std::array<Form, 3> forms, std::optional<FieldElem> gamma = {});

  CurveLabel label() const { return label_; }
  const std::array<Form, 3>& forms() const { return xyz_; }
  const Form& operator[](std::size_t i) const { return xyz_[i]; }
  std::uint32_t degree() const { return xyz_[0].degree(); }
  const Field& field() const { return xyz_[0].field(); }
  const std::optional<FieldElem>& gamma() const { return gamma_; }

  Point2 operator()(const Point1& p) const;

  std::string to_string() const;

 private:
  CurveLabel label_;
  std::array<Form, 3> xyz_;
  std::optional<FieldElem> gamma_;
};

/// Throws ParameterError when gamma violates the hypotheses for the label.
/// C1 and C2 take no gamma.
void check_curve_parameters(CurveLabel label, const Field& field,
                            const std::optional<FieldElem>& gamma);

/// One of C1..C4 over `field`; gamma must lie in F_q.
CurveMap make_curve(CurveLabel label, const Field& field, std::optional<FieldElem> gamma = {});

/// Same, over F_{q^m} with q = p^n and gamma given by its canonical F_q index.
CurveMap make_curve(CurveLabel label, std::uint64_t q, std::optional<std::uint32_t> gamma_index,
                    std::uint32_t m = 1);

CurveMap embed(const gf::Embedding& emb, const CurveMap& phi);

Point2 evaluate_curve(const CurveMap& phi, const Point1& p);

/// Projection from P composed with phi, reduced. The two linear forms come
/// from the reduced echelon basis of the annihilator of P: with j the
/// position of the leading 1 of P and k1 < k2 the other positions,
/// L_k = e_k - P_k e_j. Coordinate points give coordinate dropping.
RatMap project(const CurveMap& phi, const Point2& p);

/// deg phi - deg(project(phi, P)): 0 off the curve, otherwise the
/// multiplicity of the curve at P when phi is birational.
std::uint32_t degree_drop(const CurveMap& phi, const Point2& p);

/// Multiplicity of the curve at a point on it; throws DomainError off the curve.
std::uint32_t multiplicity_at(const CurveMap& phi, const Point2& q);

struct Birationality {
  bool birational = false;
  std::optional<Point2> witness;   // image point with projection degree d - 1
  std::optional<Point1> witness_source;
  std::uint32_t witness_degree = 0;
  bool generic_fiber_singleton = false;  // most points of P^1(F_{q^m}) are alone in their fiber
};

/// Searches images of P^1(F_{q^m}), (1:0) first, for a point whose
/// projection has degree d - 1. Such a point exists only when phi has degree
/// one onto its image, since the projection degree is a multiple of deg phi.
Birationality birationality(const CurveMap& phi);
inline bool is_birational(const CurveMap& phi) { return birationality(phi).birational; }

/// Points of P^1(F_{q^e}) with ramification index >= 2, in point order.
std::vector<std::pair<Point1, std::uint32_t>> ramification_profile(const RatMap& f,
                                                                   std::uint32_t e);

/// True iff (phi; dphi) has rank two at every point of P^1 over the
/// algebraic closure, checked in both affine charts.
bool diff_rank_check(const CurveMap& phi);

struct Flex {
  Point1 source;
  Point2 image;
};

/// Roots over F_{q^e} of det(phi, phi', phi'') in the chart t = 1, plus (1:0)
/// when the chart s = 1 determinant vanishes at t = 0. Throws DomainError
/// when a determinant vanishes identically.
std::vector<Flex> hessian_flexes(const CurveMap& phi, std::uint32_t e);

/// The Hessian determinant in the chart t = 1 (or s = 1 when swapped).
Poly hessian_determinant(const CurveMap& phi, bool swapped = false);

/// Roots over F_{q^e} of L∘phi with multiplicities. Throws DomainError when
/// L∘phi vanishes identically.
std::vector<std::pair<Point1, std::uint32_t>> line_meet(const CurveMap& phi, const Line& l,
                                                        std::uint32_t e);

/// L∘phi as a form.
Form line_form(const CurveMap& phi, const Line& l);

}  // namespace galpts
