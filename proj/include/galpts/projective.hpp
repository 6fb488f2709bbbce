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

#pragma once

#include <array>
#include <string>
#include <vector>

#include "galpts/gf.hpp"

namespace galpts {

using gf::Field;
using gf::FieldElem;

/// Point (s:t) of P^1. Canonical scaling is (a:1) for affine points and
/// (1:0) for the point at infinity, so equality is entry-wise.
class Point1 {
 public:
  Point1(FieldElem s, FieldElem t);
  static Point1 affine(const FieldElem& a);
  static Point1 infinity(const gf::FieldCtx& ctx);

  const FieldElem& s() const { return s_; }
  const FieldElem& t() const { return t_; }
  bool is_infinity() const { return t_.is_zero(); }

  friend bool operator==(const Point1& a, const Point1& b) { return a.s_ == b.s_ && a.t_ == b.t_; }
  friend bool operator!=(const Point1& a, const Point1& b) { return !(a == b); }
  /// Enumeration order: affine points by value, then infinity.
  friend bool operator<(const Point1& a, const Point1& b);

  std::string to_string() const;

 private:
  FieldElem s_, t_;
};

/// All points of P^1(F_{q^e}) inside the context, affine points first.
std::vector<Point1> projective_line(const Field& field, std::uint32_t e);

/// Point (X:Y:Z) of P^2, scaled so that the first nonzero coordinate is 1.
class Point2 {
 public:
  Point2(FieldElem x, FieldElem y, FieldElem z);
  static Point2 from_ints(const Field& field, std::int64_t x, std::int64_t y, std::int64_t z);

  const std::array<FieldElem, 3>& coords() const { return c_; }
  const FieldElem& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Point2& a, const Point2& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
  friend bool operator<(const Point2& a, const Point2& b);

  std::string to_string() const;

 private:
  std::array<FieldElem, 3> c_;
};

/// All points of P^2(F_{q^e}) in lexicographic order of canonical coordinates.
std::vector<Point2> projective_plane(const Field& field, std::uint32_t e);

}  // namespace galpts
