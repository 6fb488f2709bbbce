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


// Shared fixtures for the test binaries.

#pragma once

#include <cstdint>
#include <vector>

#include "galpts/gf.hpp"
#include "galpts/mobius.hpp"
#include "galpts/projective.hpp"
#include "galpts/rational_map.hpp"

namespace galpts::testing {

inline Field prime_field(std::uint32_t p, std::uint32_t m = 1) { return gf::make_field(p, 1, m); }

inline Field field_for(std::uint64_t q, std::uint32_t m = 1) {
  const auto [p, n] = gf::split_prime_power(q);
  return gf::make_field(p, n, m);
}

inline FieldElem el(const Field& f, std::int64_t v) { return f->from_int(v); }

inline Point1 pt(const Field& f, std::int64_t a) { return Point1::affine(f->from_int(a)); }

inline Point1 inf(const Field& f) { return Point1::infinity(*f); }

inline Mobius mob(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return Mobius(f->from_int(a), f->from_int(b), f->from_int(c), f->from_int(d));
}

// The three maps of the dihedral and cyclic lemmas, with alpha the
// primitive element of F_q.
inline Mobius sigma(const Field& f) {
  const FieldElem a = f->primitive_element();
  return Mobius(f->one(), f->zero(), f->zero(), a * a);
}
inline Mobius tau(const Field& f) {
  return Mobius(f->zero(), f->one(), f->primitive_element(), f->zero());
}
inline Mobius eta(const Field& f) {
  const FieldElem a = f->primitive_element();
  return Mobius(f->one(), f->zero(), a - f->one(), a);
}

// Form from small-integer coefficients of s^i t^(d-i), i = 0..d.
inline Form form(const Field& f, const std::vector<std::int64_t>& c) {
  std::vector<FieldElem> v;
  for (auto x : c) v.push_back(f->from_int(x));
  return Form(f, static_cast<std::uint32_t>(c.size() - 1), std::move(v));
}

// s^i t^j
inline Form mono(const Field& f, std::uint32_t i, std::uint32_t j) {
  return Form::monomial(f, f->one(), i, j);
}

}  // namespace galpts::testing
