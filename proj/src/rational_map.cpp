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

#include "galpts/rational_map.hpp"

#include <algorithm>
#include <sstream>

#include "galpts/error.hpp"

namespace galpts {

Form::Form(Field field, std::uint32_t degree)
    : field_(std::move(field)), d_(degree), c_(degree + 1, field_->zero()) {}

Form::Form(Field field, std::uint32_t degree, std::vector<FieldElem> coeffs)
    : field_(std::move(field)), d_(degree), c_(std::move(coeffs)) {
  if (c_.size() != d_ + 1) throw DomainError("form coefficient count does not match degree");
  for (const auto& c : c_) {
    if (c.ctx() != field_.get()) throw DomainError("field context mismatch");
  }
}

Form Form::monomial(Field field, const FieldElem& c, std::uint32_t i, std::uint32_t j) {
  Form f(std::move(field), i + j);
  f.c_[i] = c;
  return f;
}

Form Form::linear(const FieldElem& a, const FieldElem& b) {
  Field field = a.ctx()->shared_from_this();
  return Form(std::move(field), 1, {b, a});
}

Form Form::homogenize(const Poly& f, std::uint32_t d) {
  if (f.degree() > static_cast<int>(d)) throw DomainError("homogenization degree too small");
  Form r(f.field(), d);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.c_[i] = f.coeffs()[i];
  return r;
}

bool Form::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElem& x) { return x.is_zero(); });
}

Form Form::operator+(const Form& o) const {
  if (o.d_ != d_ || o.field_ != field_) throw DomainError("forms of different degree or field");
  Form r = *this;
  for (std::size_t i = 0; i <= d_; ++i) r.c_[i] += o.c_[i];
  return r;
}

Form Form::operator-(const Form& o) const {
  if (o.d_ != d_ || o.field_ != field_) throw DomainError("forms of different degree or field");
  Form r = *this;
  for (std::size_t i = 0; i <= d_; ++i) r.c_[i] -= o.c_[i];
  return r;
}

Form Form::operator*(const Form& o) const {
  if (o.field_ != field_) throw DomainError("field context mismatch");
  Form r(field_, d_ + o.d_);
  for (std::size_t i = 0; i <= d_; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j <= o.d_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

Form Form::scaled(const FieldElem& c) const {
  Form r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

Form Form::pow(std::uint32_t e) const {
  Form r(field_, 0, {field_->one()});
  Form b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FieldElem Form::operator()(const FieldElem& s, const FieldElem& t) const {
  FieldElem acc = field_->zero();
  FieldElem tp = field_->one();
  for (std::size_t i = d_ + 1; i-- > 0;) {
    acc = acc * s + c_[i] * tp;
    if (i > 0) tp *= t;
  }
  return acc;
}

Poly Form::chart_t() const { return Poly(field_, c_, 's'); }

Poly Form::chart_s() const {
  std::vector<FieldElem> r(c_.rbegin(), c_.rend());
  return Poly(field_, std::move(r), 't');
}

std::uint32_t Form::t_valuation() const {
  for (std::size_t i = d_ + 1; i-- > 0;) {
    if (!c_[i].is_zero()) return d_ - static_cast<std::uint32_t>(i);
  }
  return d_;
}

Form Form::pullback(const Mobius& sigma) const {
  if (sigma.entries()[0].ctx() != field_.get()) throw DomainError("field context mismatch");
  // (s, t) A = (a s + c t, b s + d t)
  const Form u = Form::linear(sigma.a(), sigma.c());
  const Form v = Form::linear(sigma.b(), sigma.d());
  std::vector<Form> upow{Form(field_, 0, {field_->one()})};
  std::vector<Form> vpow{Form(field_, 0, {field_->one()})};
  for (std::uint32_t k = 1; k <= d_; ++k) {
    upow.push_back(upow.back() * u);
    vpow.push_back(vpow.back() * v);
  }
  Form r(field_, d_);
  for (std::uint32_t i = 0; i <= d_; ++i) {
    if (c_[i].is_zero()) continue;
    r = r + (upow[i] * vpow[d_ - i]).scaled(c_[i]);
  }
  return r;
}

std::uint32_t Form::multiplicity_at(const Point1& p) const {
  if (is_zero()) throw DomainError("multiplicity on the zero form");
  if (p.is_infinity()) return t_valuation();
  return root_multiplicity(chart_t(), p.s());
}

std::vector<std::pair<Point1, std::uint32_t>> Form::roots(std::uint32_t e) const {
  if (is_zero()) throw DomainError("roots of the zero form");
  std::vector<std::pair<Point1, std::uint32_t>> out;
  const Poly f = chart_t();
  if (f.degree() > 0) {
    for (const auto& r : roots_in(f, e)) out.emplace_back(Point1::affine(r.value), r.multiplicity);
  }
  if (const auto a = t_valuation(); a > 0) out.emplace_back(Point1::infinity(*field_), a);
  return out;
}

std::vector<std::uint32_t> Form::multiplicity_profile() const {
  if (is_zero()) throw DomainError("multiplicity profile of the zero form");
  std::vector<std::uint32_t> out;
  const Poly f = chart_t();
  if (f.degree() > 0) out = galpts::multiplicity_profile(f);
  if (const auto a = t_valuation(); a > 0) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Form::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d_ + 1; i-- > 0;) {
    if (c_[i].is_zero()) continue;
    const std::uint32_t j = d_ - static_cast<std::uint32_t>(i);
    const std::string cs = c_[i].to_string();
    const bool compound = cs.find('+') != std::string::npos || cs.find('a') != std::string::npos;
    if (!first) os << " + ";
    first = false;
    const bool bare = i == 0 && j == 0;
    if (!c_[i].is_one() || bare) os << (compound ? "(" + cs + ")" : cs);
    if (i > 0) os << 's' << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) os << 't' << (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (first) os << '0';
  return os.str();
}

Form gcd(const Form& a, const Form& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero forms");
  if (a.is_zero()) return gcd(b, b);
  if (b.is_zero()) return gcd(a, a);
  const std::uint32_t tv = std::min(a.t_valuation(), b.t_valuation());
  const Poly g = gcd(a.chart_t(), b.chart_t());
  const auto gd = static_cast<std::uint32_t>(g.degree());
  return Form::homogenize(g, gd) * Form::monomial(a.field(), a.field()->one(), 0, tv);
}

Form exact_divide(const Form& a, const Form& b) {
  if (b.is_zero()) throw DomainError("division by the zero form");
  if (b.degree() > a.degree()) throw DomainError("form does not divide");
  const std::uint32_t d = a.degree() - b.degree();
  if (a.is_zero()) return Form(a.field(), d);
  if (b.t_valuation() > a.t_valuation()) throw DomainError("form does not divide");
  auto [quo, rem] = a.chart_t().divmod(b.chart_t());
  if (!rem.is_zero()) throw DomainError("form does not divide");
  return Form::homogenize(quo, d);
}

RatMap::RatMap(Form num, Form den) : f_(std::move(num)), g_(std::move(den)) {
  if (f_.degree() != g_.degree()) throw DomainError("map components must have equal degree");
  if (f_.field() != g_.field()) throw DomainError("field context mismatch");
  if (f_.is_zero() && g_.is_zero()) throw DomainError("map components are both zero");
}

bool RatMap::is_reduced() const { return gcd(f_, g_).degree() == 0; }

RatMap RatMap::reduced() const {
  const Form g = gcd(f_, g_);
  if (g.degree() == 0) return *this;
  return RatMap(exact_divide(f_, g), exact_divide(g_, g));
}

Point1 RatMap::operator()(const Point1& p) const {
  const FieldElem x = f_(p);
  const FieldElem y = g_(p);
  if (x.is_zero() && y.is_zero()) throw DomainError("map is not reduced at this point");
  return Point1(x, y);
}

bool RatMap::same_map(const RatMap& o) const {
  if (o.field() != field()) throw DomainError("field context mismatch");
  return (f_ * o.g_ - o.f_ * g_).is_zero();
}

RatMap RatMap::pullback(const Mobius& sigma) const {
  return RatMap(f_.pullback(sigma), g_.pullback(sigma)).reduced();
}

Form RatMap::fiber_form(const Point1& c) const { return f_.scaled(c.t()) - g_.scaled(c.s()); }

std::uint32_t RatMap::vanishing_order(const Point1& p) const {
  if (!is_reduced()) throw DomainError("vanishing order needs a reduced map");
  return fiber_form((*this)(p)).multiplicity_at(p);
}

std::string RatMap::to_string() const { return "(" + f_.to_string() + " : " + g_.to_string() + ")"; }

Form embed(const gf::Embedding& emb, const Form& f) {
  std::vector<FieldElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) c.push_back(emb(x));
  return Form(emb.to(), f.degree(), std::move(c));
}

RatMap embed(const gf::Embedding& emb, const RatMap& m) {
  return RatMap(embed(emb, m.num()), embed(emb, m.den()));
}

}  // namespace galpts
