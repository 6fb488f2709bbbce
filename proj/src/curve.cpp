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


#include "galpts/curve.hpp"

#include <algorithm>
#include <map>

#include "galpts/error.hpp"

namespace galpts {

std::string to_string(CurveLabel label) {
  switch (label) {
    case CurveLabel::kC1:
      return "c1";
    case CurveLabel::kC2:
      return "c2";
    case CurveLabel::kC3:
      return "c3";
    case CurveLabel::kC4:
      return "c4";
    case CurveLabel::kCustom:
      break;
  }
  return "custom";
}

std::optional<CurveLabel> parse_curve_label(const std::string& s) {
  if (s == "c1") return CurveLabel::kC1;
  if (s == "c2") return CurveLabel::kC2;
  if (s == "c3") return CurveLabel::kC3;
  if (s == "c4") return CurveLabel::kC4;
  return std::nullopt;
}

CurveMap::CurveMap(CurveLabel label, std::array<Form, 3> forms, std::optional<FieldElem> gamma)
    : label_(label), xyz_(std::move(forms)), gamma_(std::move(gamma)) {
  for (const auto& f : xyz_) {
    if (f.degree() != xyz_[0].degree()) throw DomainError("curve forms must have equal degree");
    if (f.field() != xyz_[0].field()) throw DomainError("field context mismatch");
  }
  if (xyz_[0].degree() == 0) throw DomainError("curve forms must have positive degree");
  bool all_zero = true;
  for (const auto& f : xyz_) all_zero = all_zero && f.is_zero();
  if (all_zero) throw DomainError("curve forms are all zero");
  Form g = gcd(xyz_[0], xyz_[1]);
  g = xyz_[2].is_zero() ? g : gcd(g, xyz_[2]);
  if (g.degree() != 0) throw DomainError("curve forms have a common factor " + g.to_string());
}

Point2 CurveMap::operator()(const Point1& p) const {
  const FieldElem x = xyz_[0](p);
  const FieldElem y = xyz_[1](p);
  const FieldElem z = xyz_[2](p);
  if (x.is_zero() && y.is_zero() && z.is_zero()) {
    throw DomainError("internal: all curve forms vanish at " + p.to_string());
  }
  return Point2(x, y, z);
}

std::string CurveMap::to_string() const {
  return "(" + xyz_[0].to_string() + " : " + xyz_[1].to_string() + " : " + xyz_[2].to_string() +
         ")";
}

void check_curve_parameters(CurveLabel label, const Field& field,
                            const std::optional<FieldElem>& gamma) {
  const std::uint64_t q = field->q();
  switch (label) {
    case CurveLabel::kC1:
    case CurveLabel::kC2:
      if (gamma) throw ParameterError("γ is not a parameter of " + to_string(label));
      return;
    case CurveLabel::kC3:
    case CurveLabel::kC4:
      break;
    case CurveLabel::kCustom:
      throw ParameterError("custom curves are built from explicit forms");
  }
  if (label == CurveLabel::kC4 && q + 1 <= 6) throw ParameterError("degree q+1 > 6 violated");
  if (!gamma) throw ParameterError(to_string(label) + " requires γ");
  if (gamma->ctx() != field.get()) throw DomainError("field context mismatch");
  if (!field->in_fq(*gamma)) throw ParameterError("γ ∉ F_q");
  const bool pm_one = gamma->is_one() || (-*gamma).is_one();
  if (label == CurveLabel::kC3) {
    if (gamma->is_zero() || pm_one) throw ParameterError("γ ∉ F_q \\ {0, ±1}");
    return;
  }
  if (pm_one) throw ParameterError("γ ∉ F_q \\ {±1}");
  if (gamma->is_zero() || !gamma->pow((q - 1) / 2).is_one()) {
    throw ParameterError("γ^{(q-1)/2} = 1 violated");
  }
}

CurveMap make_curve(CurveLabel label, const Field& field, std::optional<FieldElem> gamma) {
  check_curve_parameters(label, field, gamma);
  const std::uint32_t q = static_cast<std::uint32_t>(field->q());
  const std::uint32_t k = (q + 1) / 2;
  const std::uint32_t h = (q - 1) / 2;
  const FieldElem one = field->one();
  auto mono = [&](std::uint32_t i, std::uint32_t j) { return Form::monomial(field, one, i, j); };
  const Form s_minus_t = Form::linear(one, -one);
  const Form s_plus_t = Form::linear(one, one);
  switch (label) {
    case CurveLabel::kC1:
      return CurveMap(label, {mono(k, h), s_minus_t * mono(0, q - 1), mono(q, 0) - mono(1, q - 1)});
    case CurveLabel::kC2:
      return CurveMap(label, {mono(k, h), s_minus_t.pow(k) * mono(0, h), mono(q, 0) - mono(1, q - 1)});
    case CurveLabel::kC3:
      return CurveMap(label,
                      {mono(k, k), s_plus_t.pow(q + 1),
                       mono(q + 1, 0) + Form::monomial(field, *gamma, 0, q + 1)},
                      gamma);
    case CurveLabel::kC4:
      return CurveMap(label,
                      {mono(k, k), (s_plus_t * Form::linear(one, *gamma)).pow(k),
                       mono(q + 1, 0) - Form::monomial(field, *gamma, 0, q + 1)},
                      gamma);
    case CurveLabel::kCustom:
      break;
  }
  throw ParameterError("unknown curve label");
}

CurveMap make_curve(CurveLabel label, std::uint64_t q, std::optional<std::uint32_t> gamma_index,
                    std::uint32_t m) {
  const auto [p, n] = gf::split_prime_power(q);
  Field field = gf::make_field(p, n, m);
  std::optional<FieldElem> gamma;
  if (gamma_index) gamma = field->from_fq_index(*gamma_index);
  return make_curve(label, field, gamma);
}

CurveMap embed(const gf::Embedding& emb, const CurveMap& phi) {
  std::optional<FieldElem> gamma;
  if (phi.gamma()) gamma = emb(*phi.gamma());
  return CurveMap(phi.label(), {embed(emb, phi[0]), embed(emb, phi[1]), embed(emb, phi[2])},
                  gamma);
}

Point2 evaluate_curve(const CurveMap& phi, const Point1& p) { return phi(p); }

RatMap project(const CurveMap& phi, const Point2& p) {
  std::size_t j = 0;
  while (p[j].is_zero()) ++j;
  std::array<std::size_t, 2> free{};
  std::size_t n = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k != j) free[n++] = k;
  }
  auto component = [&](std::size_t k) { return phi[k] - phi[j].scaled(p[k]); };
  return RatMap(component(free[0]), component(free[1])).reduced();
}

std::uint32_t degree_drop(const CurveMap& phi, const Point2& p) {
  return phi.degree() - project(phi, p).form_degree();
}

std::uint32_t multiplicity_at(const CurveMap& phi, const Point2& q) {
  const std::uint32_t m = degree_drop(phi, q);
  if (m == 0) throw DomainError("point " + q.to_string() + " is not on the curve");
  return m;
}

Birationality birationality(const CurveMap& phi) {
  Birationality out;
  const Field& field = phi.field();
  std::vector<Point1> pts = projective_line(field, field->m());
  std::rotate(pts.begin(), pts.end() - 1, pts.end());  // (1:0) first
  const std::uint32_t d = phi.degree();
  for (const auto& p : pts) {
    const Point2 r = phi(p);
    const std::uint32_t deg = project(phi, r).form_degree();
    if (deg + 1 == d) {
      out.birational = true;
      out.witness = r;
      out.witness_source = p;
      out.witness_degree = deg;
      break;
    }
  }
  std::map<Point2, std::size_t> fiber_size;
  for (const auto& p : pts) ++fiber_size[phi(p)];
  std::size_t alone = 0;
  for (const auto& p : pts) alone += fiber_size[phi(p)] == 1;
  out.generic_fiber_singleton = 2 * alone > pts.size();
  return out;
}

std::vector<std::pair<Point1, std::uint32_t>> ramification_profile(const RatMap& f,
                                                                   std::uint32_t e) {
  const RatMap g = f.reduced();
  std::vector<std::pair<Point1, std::uint32_t>> out;
  for (const auto& p : projective_line(g.field(), e)) {
    const std::uint32_t idx = g.vanishing_order(p);
    if (idx >= 2) out.emplace_back(p, idx);
  }
  return out;
}

namespace {

std::array<Poly, 3> chart(const CurveMap& phi, bool swapped) {
  std::array<Poly, 3> out{Poly(phi.field()), Poly(phi.field()), Poly(phi.field())};
  for (std::size_t i = 0; i < 3; ++i) out[i] = swapped ? phi[i].chart_s() : phi[i].chart_t();
  return out;
}

Poly det3(const std::array<Poly, 3>& r0, const std::array<Poly, 3>& r1,
          const std::array<Poly, 3>& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

std::array<Poly, 3> derivatives(const std::array<Poly, 3>& v) {
  return {derivative(v[0]), derivative(v[1]), derivative(v[2])};
}

// gcd of the 2x2 minors of the rows (v; v'); zero when all minors vanish.
Poly minor_gcd(const std::array<Poly, 3>& v) {
  const auto dv = derivatives(v);
  Poly g(v[0].field(), v[0].var());
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
    const Poly minor = v[a] * dv[b] - v[b] * dv[a];
    if (minor.is_zero()) continue;
    g = g.is_zero() ? minor.monic() : gcd(g, minor);
  }
  return g;
}

}  // namespace

bool diff_rank_check(const CurveMap& phi) {
  const Poly g_t = minor_gcd(chart(phi, false));
  if (g_t.is_zero() || g_t.degree() > 0) return false;
  // Chart s = 1 only adds the point t = 0.
  const Poly g_s = minor_gcd(chart(phi, true));
  return !g_s.is_zero() && !g_s(phi.field()->zero()).is_zero();
}

Poly hessian_determinant(const CurveMap& phi, bool swapped) {
  const auto v = chart(phi, swapped);
  const auto dv = derivatives(v);
  return det3(v, dv, derivatives(dv));
}

std::vector<Flex> hessian_flexes(const CurveMap& phi, std::uint32_t e) {
  const Poly det_t = hessian_determinant(phi, false);
  const Poly det_s = hessian_determinant(phi, true);
  if (det_t.is_zero() || det_s.is_zero()) {
    throw DomainError("Hessian determinant vanishes identically");
  }
  std::vector<Flex> out;
  for (const auto& r : roots_in(det_t, e)) {
    const Point1 p = Point1::affine(r.value);
    out.push_back({p, phi(p)});
  }
  if (det_s(phi.field()->zero()).is_zero()) {
    const Point1 p = Point1::infinity(*phi.field());
    out.push_back({p, phi(p)});
  }
  return out;
}

Form line_form(const CurveMap& phi, const Line& l) {
  return phi[0].scaled(l[0]) + phi[1].scaled(l[1]) + phi[2].scaled(l[2]);
}

std::vector<std::pair<Point1, std::uint32_t>> line_meet(const CurveMap& phi, const Line& l,
                                                        std::uint32_t e) {
  const Form f = line_form(phi, l);
  if (f.is_zero()) throw DomainError("curve lies in the line");
  auto out = f.roots(e);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace galpts
