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

// Homogeneous binary forms F(s, t) and maps P^1 -> P^1 given by pairs of them.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "galpts/mobius.hpp"
#include "galpts/poly.hpp"
#include "galpts/projective.hpp"

namespace galpts {

/// Binary form of a fixed degree d: sum of c_i s^i t^(d-i), i = 0..d.
/// The degree is part of the value; a zero form still has a degree.
class Form {
 public:
  Form(Field field, std::uint32_t degree);
  Form(Field field, std::uint32_t degree, std::vector<FieldElem> coeffs);

  /// c s^i t^j
  static Form monomial(Field field, const FieldElem& c, std::uint32_t i, std::uint32_t j);
  /// a s + b t
  static Form linear(const FieldElem& a, const FieldElem& b);
  /// Homogenization of f to degree d >= deg f.
  static Form homogenize(const Poly& f, std::uint32_t d);

  const Field& field() const { return field_; }
  std::uint32_t degree() const { return d_; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  /// Coefficient of s^i t^(d-i).
  const FieldElem& coeff(std::uint32_t i) const { return c_.at(i); }
  bool is_zero() const;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  Form scaled(const FieldElem& c) const;
  Form pow(std::uint32_t e) const;

  FieldElem operator()(const FieldElem& s, const FieldElem& t) const;
  FieldElem operator()(const Point1& p) const { return (*this)(p.s(), p.t()); }

  /// F(s, 1) as a polynomial in s.
  Poly chart_t() const;
  /// F(1, t) as a polynomial in t.
  Poly chart_s() const;
  /// Largest a with t^a | F (degree for the zero form).
  std::uint32_t t_valuation() const;

  /// F((s, t) A_sigma): the pullback along sigma.
  Form pullback(const Mobius& sigma) const;

  /// Multiplicity of p as a root of F; F must be nonzero.
  std::uint32_t multiplicity_at(const Point1& p) const;
  /// Roots in P^1(F_{q^e}) with multiplicities.
  std::vector<std::pair<Point1, std::uint32_t>> roots(std::uint32_t e) const;
  /// Multiplicities of all distinct roots over the algebraic closure.
  std::vector<std::uint32_t> multiplicity_profile() const;

  friend bool operator==(const Form& a, const Form& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

  std::string to_string() const;

 private:
  Field field_;
  std::uint32_t d_;
  std::vector<FieldElem> c_;
};

/// Monic-normalized gcd of two forms (t-power bookkeeping plus the gcd of the
/// dehomogenizations). Throws DomainError when both are zero.
Form gcd(const Form& a, const Form& b);

/// a / b for b dividing a exactly; throws DomainError otherwise.
Form exact_divide(const Form& a, const Form& b);

/// Map (s:t) -> (F(s,t) : G(s,t)) with deg F = deg G, not both zero.
class RatMap {
 public:
  RatMap(Form num, Form den);

  const Form& num() const { return f_; }
  const Form& den() const { return g_; }
  const Field& field() const { return f_.field(); }
  std::uint32_t form_degree() const { return f_.degree(); }
  bool is_reduced() const;

  /// Both forms divided by their gcd; the form degree is then the map degree.
  RatMap reduced() const;
  /// Degree of the induced map P^1 -> P^1.
  std::uint32_t degree() const { return reduced().form_degree(); }

  /// Value at p; the map must be reduced.
  Point1 operator()(const Point1& p) const;

  /// Same map of P^1 (pairs agree up to a common factor and scalar).
  bool same_map(const RatMap& o) const;

  /// Pullback along sigma, reduced: the map p -> this(sigma(p)).
  RatMap pullback(const Mobius& sigma) const;

  /// Ramification index at p: multiplicity of p in the fiber form
  /// G(P)·F - F(P)·G. Throws DomainError on unreduced input.
  std::uint32_t vanishing_order(const Point1& p) const;

  /// Fiber form over the value c: c.t·F - c.s·G.
  Form fiber_form(const Point1& c) const;

  std::string to_string() const;

 private:
  Form f_, g_;
};

/// Transport of forms and maps along a field embedding.
Form embed(const gf::Embedding& emb, const Form& f);
RatMap embed(const gf::Embedding& emb, const RatMap& m);

}  // namespace galpts
