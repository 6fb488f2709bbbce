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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galpts/projective.hpp"

namespace galpts {

/// Element of PGL(2) acting on row vectors: sigma(s, t) = (s, t) A with
/// A = [[a, b], [c, d]], i.e. (s:t) -> (a s + c t : b s + d t).
/// Stored with the first nonzero entry scaled to 1.
class Mobius {
 public:
  Mobius(FieldElem a, FieldElem b, FieldElem c, FieldElem d);
  static Mobius identity(const gf::FieldCtx& ctx);
  /// Unique element sending x_i to y_i (i = 0, 1, 2); points must be distinct.
  static Mobius from_three_points(const std::array<Point1, 3>& x, const std::array<Point1, 3>& y);

  const FieldElem& a() const { return m_[0]; }
  const FieldElem& b() const { return m_[1]; }
  const FieldElem& c() const { return m_[2]; }
  const FieldElem& d() const { return m_[3]; }
  const std::array<FieldElem, 4>& entries() const { return m_; }
  const gf::FieldCtx& ctx() const { return *m_[0].ctx(); }

  bool is_identity() const;
  Mobius inverse() const;
  Point1 operator()(const Point1& p) const;

  /// Encodings of the canonical entries; total order and hashing key.
  std::array<std::uint32_t, 4> key() const;

  friend bool operator==(const Mobius& x, const Mobius& y) { return x.m_ == y.m_; }
  friend bool operator!=(const Mobius& x, const Mobius& y) { return !(x == y); }
  friend bool operator<(const Mobius& x, const Mobius& y) { return x.key() < y.key(); }

  std::string to_string() const;

 private:
  std::array<FieldElem, 4> m_;
};

/// outer ∘ inner as maps of P^1; with row vectors its matrix is A_inner · A_outer.
Mobius compose(const Mobius& outer, const Mobius& inner);

/// Least k >= 1 with sigma^k = 1 in PGL(2).
std::uint64_t order_of(const Mobius& sigma);

struct FixedPoints {
  bool everything = false;        // identity
  std::vector<Point1> points;     // rational fixed points
  bool in_extension = false;      // fixed points exist only in a proper extension
};

FixedPoints fixed_points(const Mobius& sigma);

}  // namespace galpts

template <>
struct std::hash<galpts::Mobius> {
  std::size_t operator()(const galpts::Mobius& m) const noexcept {
    std::size_t h = 0;
    for (auto k : m.key()) h = h * 1000003u ^ k;
    return h;
  }
};
