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

#include "galpts/mobius.hpp"

#include <algorithm>

#include "galpts/error.hpp"
#include "galpts/poly.hpp"

namespace galpts {

Mobius::Mobius(FieldElem a, FieldElem b, FieldElem c, FieldElem d) : m_{a, b, c, d} {
  for (const auto& e : m_) {
    if (e.ctx() != a.ctx() || e.ctx() == nullptr) throw DomainError("field context mismatch");
  }
  if ((a * d - b * c).is_zero()) throw DomainError("singular matrix is not in PGL(2)");
  for (const auto& e : m_) {
    if (!e.is_zero()) {
      const FieldElem inv = e.inverse();
      for (auto& x : m_) x *= inv;
      break;
    }
  }
}

Mobius Mobius::identity(const gf::FieldCtx& ctx) {
  return Mobius(ctx.one(), ctx.zero(), ctx.zero(), ctx.one());
}

namespace {

// Rows r0 = l0·x0 and r1 = l1·x1 with l0·x0 + l1·x1 = x2, so the matrix sends
// (1:0) -> x0, (0:1) -> x1, (1:1) -> x2.
std::array<FieldElem, 4> frame(const std::array<Point1, 3>& x) {
  const auto& s0 = x[0].s();
  const auto& t0 = x[0].t();
  const auto& s1 = x[1].s();
  const auto& t1 = x[1].t();
  const FieldElem det = s0 * t1 - t0 * s1;
  if (det.is_zero()) throw DomainError("frame points must be distinct");
  const FieldElem l0 = (x[2].s() * t1 - x[2].t() * s1) / det;
  const FieldElem l1 = (s0 * x[2].t() - t0 * x[2].s()) / det;
  if (l0.is_zero() || l1.is_zero()) throw DomainError("frame points must be distinct");
  return {l0 * s0, l0 * t0, l1 * s1, l1 * t1};
}

}  // namespace

Mobius Mobius::from_three_points(const std::array<Point1, 3>& x, const std::array<Point1, 3>& y) {
  const auto fx = frame(x);
  const auto fy = frame(y);
  const Mobius bx(fx[0], fx[1], fx[2], fx[3]);
  const Mobius by(fy[0], fy[1], fy[2], fy[3]);
  // P -> P·Bx^{-1}·By sends x_i to the frame point and then to y_i.
  return compose(by, bx.inverse());
}

bool Mobius::is_identity() const {
  return m_[0].is_one() && m_[1].is_zero() && m_[2].is_zero() && m_[3].is_one();
}

Mobius Mobius::inverse() const { return Mobius(m_[3], -m_[1], -m_[2], m_[0]); }

Point1 Mobius::operator()(const Point1& p) const {
  return Point1(p.s() * m_[0] + p.t() * m_[2], p.s() * m_[1] + p.t() * m_[3]);
}

std::array<std::uint32_t, 4> Mobius::key() const {
  return {m_[0].encoding(), m_[1].encoding(), m_[2].encoding(), m_[3].encoding()};
}

std::string Mobius::to_string() const {
  return "[[" + m_[0].to_string() + "," + m_[1].to_string() + "],[" + m_[2].to_string() + "," +
         m_[3].to_string() + "]]";
}

Mobius compose(const Mobius& outer, const Mobius& inner) {
  const auto& x = inner.entries();
  const auto& y = outer.entries();
  return Mobius(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                x[2] * y[1] + x[3] * y[3]);
}

std::uint64_t order_of(const Mobius& sigma) {
  Mobius cur = sigma;
  std::uint64_t k = 1;
  const std::uint64_t bound = 2 * (sigma.ctx().size() + 1) * sigma.ctx().size();
  while (!cur.is_identity()) {
    cur = compose(cur, sigma);
    if (++k > bound) throw DomainError("order computation did not terminate");
  }
  return k;
}

FixedPoints fixed_points(const Mobius& sigma) {
  FixedPoints out;
  if (sigma.is_identity()) {
    out.everything = true;
    return out;
  }
  const auto& ctx = sigma.ctx();
  // (s,1)A ∥ (s,1): b s^2 + (d - a) s - c = 0; (1:0) is fixed iff b = 0.
  Field field = ctx.shared_from_this();
  Poly quad(field, {-sigma.c(), sigma.d() - sigma.a(), sigma.b()});
  int expected = 2;
  if (sigma.b().is_zero()) {
    out.points.push_back(Point1::infinity(ctx));
    expected = 1;
  }
  if (!quad.is_zero() && quad.degree() > 0) {
    const auto roots = roots_in(quad, ctx.m());
    for (const auto& r : roots) out.points.push_back(Point1::affine(r.value));
    if (quad.degree() == expected && roots.empty()) out.in_extension = true;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

}  // namespace galpts
