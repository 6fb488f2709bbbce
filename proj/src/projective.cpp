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

#include "galpts/projective.hpp"

#include <algorithm>

#include "galpts/error.hpp"

namespace galpts {

Point1::Point1(FieldElem s, FieldElem t) {
  if (s.ctx() != t.ctx() || s.ctx() == nullptr) throw DomainError("field context mismatch");
  if (t.is_zero()) {
    if (s.is_zero()) throw DomainError("(0:0) is not a point of P^1");
    s_ = s.ctx()->one();
    t_ = t;
  } else {
    s_ = s / t;
    t_ = t.ctx()->one();
  }
}

Point1 Point1::affine(const FieldElem& a) { return Point1(a, a.ctx()->one()); }

Point1 Point1::infinity(const gf::FieldCtx& ctx) { return Point1(ctx.one(), ctx.zero()); }

bool operator<(const Point1& a, const Point1& b) {
  if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
  return a.s_ < b.s_;
}

std::string Point1::to_string() const { return "(" + s_.to_string() + ":" + t_.to_string() + ")"; }

std::vector<Point1> projective_line(const Field& field, std::uint32_t e) {
  std::vector<Point1> out;
  for (const auto& x : field->enumerate(e)) out.push_back(Point1::affine(x));
  std::sort(out.begin(), out.end());
  out.push_back(Point1::infinity(*field));
  return out;
}

Point2::Point2(FieldElem x, FieldElem y, FieldElem z) : c_{x, y, z} {
  if (x.ctx() != y.ctx() || y.ctx() != z.ctx() || x.ctx() == nullptr) {
    throw DomainError("field context mismatch");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!c_[i].is_zero()) {
      const FieldElem inv = c_[i].inverse();
      for (auto& c : c_) c *= inv;
      return;
    }
  }
  throw DomainError("(0:0:0) is not a point of P^2");
}

Point2 Point2::from_ints(const Field& field, std::int64_t x, std::int64_t y, std::int64_t z) {
  return Point2(field->from_int(x), field->from_int(y), field->from_int(z));
}

bool operator<(const Point2& a, const Point2& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.c_[i].encoding() != b.c_[i].encoding()) return a.c_[i].encoding() < b.c_[i].encoding();
  }
  return false;
}

std::string Point2::to_string() const {
  return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

std::vector<Point2> projective_plane(const Field& field, std::uint32_t e) {
  const auto elems = field->enumerate(e);
  const auto zero = field->zero();
  const auto one = field->one();
  std::vector<Point2> out;
  for (const auto& y : elems) {
    for (const auto& z : elems) out.emplace_back(one, y, z);
  }
  for (const auto& z : elems) out.emplace_back(zero, one, z);
  out.emplace_back(zero, zero, one);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace galpts
