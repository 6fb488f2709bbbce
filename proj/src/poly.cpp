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

#include "galpts/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "galpts/error.hpp"

namespace galpts {

namespace {

constexpr std::uint64_t kExhaustiveRootLimit = 10000;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

Poly::Poly(Field field, std::vector<FieldElem> coeffs, char var)
    : field_(std::move(field)), c_(std::move(coeffs)), var_(var) {
  for (const auto& c : c_) {
    if (c.ctx() != field_.get()) throw DomainError("field context mismatch");
  }
  normalize();
}

Poly Poly::constant(Field field, const FieldElem& c, char var) {
  return Poly(std::move(field), {c}, var);
}

Poly Poly::monomial(Field field, const FieldElem& c, std::size_t k, char var) {
  std::vector<FieldElem> v(k + 1, field->zero());
  v[k] = c;
  return Poly(std::move(field), std::move(v), var);
}

Poly Poly::linear_root(Field field, const FieldElem& a, char var) {
  auto one = field->one();
  return Poly(std::move(field), {-a, one}, var);
}

Poly Poly::from_ints(Field field, const std::vector<std::int64_t>& c, char var) {
  std::vector<FieldElem> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(field->from_int(x));
  return Poly(std::move(field), std::move(v), var);
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (field_ != o.field_) throw DomainError("field context mismatch");
}

FieldElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_->zero(); }

FieldElem Poly::lead() const { return c_.empty() ? field_->zero() : c_.back(); }

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Poly(field_, std::move(r), var_);
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), field_->zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Poly(field_, std::move(r), var_);
}

Poly Poly::operator-() const {
  std::vector<FieldElem> r = c_;
  for (auto& x : r) x = -x;
  return Poly(field_, std::move(r), var_);
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (c_.empty() || o.c_.empty()) return Poly(field_, var_);
  std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(field_, std::move(r), var_);
}

Poly Poly::scaled(const FieldElem& c) const {
  std::vector<FieldElem> r = c_;
  for (auto& x : r) x *= c;
  return Poly(field_, std::move(r), var_);
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(field_, field_->one(), var_);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_same(d);
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<FieldElem> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  if (rem.size() <= dd) return {Poly(field_, var_), *this};
  std::vector<FieldElem> quo(rem.size() - dd, field_->zero());
  const FieldElem inv_lead = d.lead().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    const FieldElem c = rem[k] * inv_lead;
    quo[k - dd] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[k - dd + i] -= c * d.c_[i];
  }
  rem.resize(dd);
  return {Poly(field_, std::move(quo), var_), Poly(field_, std::move(rem), var_)};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::compose(const Poly& inner) const {
  check_same(inner);
  Poly r(field_, var_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * inner + constant(field_, c_[i], var_);
  return r;
}

FieldElem Poly::operator()(const FieldElem& x) const {
  if (x.ctx() != field_.get()) throw DomainError("field context mismatch");
  FieldElem acc = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    const std::string cs = c_[i].to_string();
    const bool compound = cs.find('+') != std::string::npos || cs.find('a') != std::string::npos;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (!c_[i].is_one()) os << (compound ? "(" + cs + ")" : cs);
    os << var_;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly derivative(const Poly& f) {
  const auto& c = f.coeffs();
  if (c.size() <= 1) return Poly(f.field(), f.var());
  std::vector<FieldElem> r(c.size() - 1, f.field()->zero());
  for (std::size_t i = 1; i < c.size(); ++i) {
    r[i - 1] = f.field()->from_int(static_cast<std::int64_t>(i % f.field()->p())) * c[i];
  }
  return Poly(f.field(), std::move(r), f.var());
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(base.field(), base.field()->one(), base.var()) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

std::uint32_t root_multiplicity(const Poly& f, const FieldElem& a) {
  if (f.is_zero()) throw DomainError("root multiplicity of the zero polynomial");
  const Poly lin = Poly::linear_root(f.field(), a, f.var());
  Poly cur = f;
  std::uint32_t k = 0;
  while (true) {
    auto [quo, rem] = cur.divmod(lin);
    if (!rem.is_zero()) break;
    cur = std::move(quo);
    ++k;
  }
  return k;
}

namespace {

// Splits a monic squarefree product of distinct linear factors over F_{q^e}.
void split_linear(const Poly& g, std::uint64_t sub_size, std::mt19937_64& rng,
                  std::vector<FieldElem>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  const auto& field = g.field();
  const std::uint64_t step = (field->size() - 1) / (sub_size - 1);
  while (true) {
    const std::uint64_t k = rng() % (sub_size - 1);
    const FieldElem a = field->generator().pow(k * step);
    Poly x_plus_a(field, {a, field->one()}, g.var());
    Poly h = powmod(x_plus_a, (sub_size - 1) / 2, g) - Poly::constant(field, field->one(), g.var());
    if (h.is_zero()) continue;
    Poly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, sub_size, rng, out);
      split_linear((g / d).monic(), sub_size, rng, out);
      return;
    }
  }
}

Poly pth_root(const Poly& f) {
  const auto& field = f.field();
  const std::uint32_t p = field->p();
  const std::uint64_t root_exp = ipow(p, field->degree() - 1);
  std::vector<FieldElem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i].pow(root_exp));
  return Poly(field, std::move(r), f.var());
}

void squarefree(const Poly& f, std::uint32_t scale, std::vector<std::uint32_t>& out) {
  if (f.degree() <= 0) return;
  const Poly one = Poly::constant(f.field(), f.field()->one(), f.var());
  Poly c = gcd(f, derivative(f));
  Poly w = (f / c).monic();
  std::uint32_t i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    for (int k = 0; k < fac.degree(); ++k) out.push_back(i * scale);
    w = y;
    c = (c / y).monic();
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c).monic(), scale * f.field()->p(), out);
}

}  // namespace

std::vector<Root> roots_in(const Poly& f, std::uint32_t e) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  const auto& field = f.field();
  if (e == 0 || field->m() % e != 0) throw DomainError("subfield degree must divide m");
  const std::uint64_t sub_size = ipow(field->q(), e);
  std::vector<FieldElem> candidates;
  if (sub_size <= kExhaustiveRootLimit) {
    for (const auto& x : field->enumerate(e)) {
      if (f(x).is_zero()) candidates.push_back(x);
    }
  } else {
    const Poly x = Poly::monomial(field, field->one(), 1, f.var());
    const Poly g = gcd(f, powmod(x, sub_size, f.monic()) - x);
    std::mt19937_64 rng(0x5eed);
    split_linear(g.monic(), sub_size, rng, candidates);
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<Root> out;
  for (const auto& r : candidates) out.push_back({r, root_multiplicity(f, r)});
  return out;
}

std::vector<std::uint32_t> multiplicity_profile(const Poly& f) {
  if (f.is_zero()) throw DomainError("multiplicity profile of the zero polynomial");
  std::vector<std::uint32_t> out;
  squarefree(f.monic(), 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace galpts
