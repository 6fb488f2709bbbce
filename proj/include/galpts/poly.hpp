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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "galpts/gf.hpp"

namespace galpts {

using gf::Field;
using gf::FieldElem;

/// Dense univariate polynomial over a field context. Coefficients are stored
/// low to high and the leading coefficient is nonzero (the zero polynomial
/// has no coefficients and degree -1).
class Poly {
 public:
  explicit Poly(Field field, char var = 's') : field_(std::move(field)), var_(var) {}
  Poly(Field field, std::vector<FieldElem> coeffs, char var = 's');

  static Poly constant(Field field, const FieldElem& c, char var = 's');
  /// c · var^k
  static Poly monomial(Field field, const FieldElem& c, std::size_t k, char var = 's');
  /// var - a
  static Poly linear_root(Field field, const FieldElem& a, char var = 's');
  /// Small-integer coefficients, low to high.
  static Poly from_ints(Field field, const std::vector<std::int64_t>& c, char var = 's');

  const Field& field() const { return field_; }
  char var() const { return var_; }
  Poly with_var(char v) const {
    Poly r = *this;
    r.var_ = v;
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  /// Coefficient of var^i (zero beyond the degree).
  FieldElem coeff(std::size_t i) const;
  FieldElem lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const FieldElem& c) const;
  Poly pow(std::uint64_t e) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  Poly monic() const;
  /// this(inner(var)).
  Poly compose(const Poly& inner) const;
  FieldElem operator()(const FieldElem& x) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_same(const Poly& o) const;
  void normalize();

  Field field_;
  std::vector<FieldElem> c_;
  char var_;
};

/// Term-wise derivative; exponents are reduced in the field, so d/ds s^p = 0.
Poly derivative(const Poly& f);

/// Monic gcd. Throws DomainError when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Multiplicity of a as a root of f (f nonzero), by repeated exact division.
std::uint32_t root_multiplicity(const Poly& f, const FieldElem& a);

struct Root {
  FieldElem value;
  std::uint32_t multiplicity;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Roots of f in the subfield F_{q^e} of f's context (e divides m), sorted by
/// encoding. Small subfields are scanned; larger ones go through
/// gcd(f, X^(q^e) - X) and equal-degree splitting.
std::vector<Root> roots_in(const Poly& f, std::uint32_t e);

/// Multiplicities of the distinct roots of f over the algebraic closure
/// (squarefree decomposition, valid in characteristic p), sorted ascending.
std::vector<std::uint32_t> multiplicity_profile(const Poly& f);

}  // namespace galpts
