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

#include "galpts/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "galpts/error.hpp"

namespace galpts::gf {

namespace {

// Dense polynomials over F_p, low to high, used only while building a context.
using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t inv_lead = [&] {
    std::uint64_t r = 1, b = f.back(), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > df) {
    const std::uint64_t c = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::uint32_t p) {
  Coeffs r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Rabin's test: f of degree N is irreducible iff x^(p^N) = x mod f and
// gcd(x^(p^(N/r)) - x, f) = 1 for every prime r | N.
bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  if (deg == 1) return true;
  auto frob_iter = [&](std::uint32_t k) {
    Coeffs x{0, 1};
    for (std::uint32_t i = 0; i < k; ++i) x = poly_powmod(x, p, f, p);
    return x;
  };
  auto minus_x = [&](Coeffs a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob_iter(deg)).empty()) return false;
  for (auto r : prime_factors(deg)) {
    Coeffs g = poly_gcd(minus_x(frob_iter(deg / static_cast<std::uint32_t>(r))), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Monic polynomials of degree N are visited with the lower coefficients read
// as a base-p number, c_0 least significant; the first irreducible one wins.
Coeffs first_irreducible(std::uint32_t p, std::uint32_t deg) {
  const std::uint64_t count = ipow(p, deg);
  for (std::uint64_t k = 0; k < count; ++k) {
    Coeffs f(deg + 1, 0);
    std::uint64_t v = k;
    for (std::uint32_t i = 0; i < deg; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[deg] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

std::string poly_string(const Coeffs& c, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t n = 0;
  std::uint64_t v = q;
  while (v % p == 0) {
    v /= p;
    ++n;
  }
  if (v != 1) throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), n};
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t n, std::uint32_t m)
    : p_(p), n_(n), m_(m), q_(ipow(p, n)), size_(ipow(p, n * m)) {
  const std::uint32_t deg = n * m;
  modulus_ = first_irreducible(p, deg);
  base_modulus_ = m == 1 ? modulus_ : first_irreducible(p, n);
  pow_p_.resize(deg);
  for (std::uint32_t i = 0; i < deg; ++i) pow_p_[i] = static_cast<std::uint32_t>(ipow(p, i));

  auto decode = [&](std::uint64_t enc) {
    Coeffs c(deg, 0);
    for (std::uint32_t i = 0; i < deg; ++i) {
      c[i] = static_cast<std::uint32_t>(enc % p);
      enc /= p;
    }
    trim(c);
    return c;
  };
  auto encode = [&](const Coeffs& c) {
    std::uint64_t enc = 0;
    for (std::size_t i = c.size(); i-- > 0;) enc = enc * p + c[i];
    return static_cast<std::uint32_t>(enc);
  };

  // Generator of the multiplicative group: smallest encoding of full order.
  const std::uint64_t group = size_ - 1;
  const auto factors = prime_factors(group);
  for (std::uint64_t g = 1; g < size_; ++g) {
    const Coeffs gc = decode(g);
    bool full = true;
    for (auto r : factors) {
      Coeffs t = poly_powmod(gc, group / r, modulus_, p);
      if (t.size() == 1 && t[0] == 1) {
        full = false;
        break;
      }
    }
    if (group == 1 || full) {
      gen_ = static_cast<std::uint32_t>(g);
      break;
    }
  }

  exp_.resize(group);
  log_.assign(size_, 0);
  Coeffs cur{1};
  const Coeffs gc = decode(gen_);
  for (std::uint64_t i = 0; i < group; ++i) {
    const std::uint32_t e = encode(cur);
    exp_[i] = e;
    log_[e] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, gc, modulus_, p);
  }

  // Explicit embedding of F_q: canonical index k (coefficients over F_p in
  // the basis 1, y, ..., y^(n-1) of F_p[y]/(base_modulus)) maps to the same
  // combination of powers of r, the smallest root of base_modulus here.
  fq_.resize(q_);
  if (m == 1) {
    for (std::uint64_t k = 0; k < q_; ++k) fq_[k] = static_cast<std::uint32_t>(k);
  } else {
    const std::uint64_t step = group / (q_ - 1);
    std::uint32_t root = 0;
    bool found = false;
    std::vector<std::uint32_t> cands{0};
    for (std::uint64_t k = 0; k < q_ - 1; ++k) cands.push_back(exp_[k * step]);
    std::sort(cands.begin(), cands.end());
    for (auto c : cands) {
      std::uint32_t acc = 0;
      for (std::size_t i = base_modulus_.size(); i-- > 0;) {
        acc = add(mul(acc, c), base_modulus_[i]);
      }
      if (acc == 0) {
        root = c;
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("subfield embedding failed");
    std::vector<std::uint32_t> powers(n);
    powers[0] = 1;
    for (std::uint32_t i = 1; i < n; ++i) powers[i] = mul(powers[i - 1], root);
    for (std::uint64_t k = 0; k < q_; ++k) {
      std::uint64_t v = k;
      std::uint32_t acc = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        acc = add(acc, mul(static_cast<std::uint32_t>(v % p), powers[i]));
        v /= p;
      }
      fq_[k] = acc;
    }
  }

  for (std::uint64_t k = 1; k < q_; ++k) {
    FieldElem x(this, fq_[k]);
    if (x.order() == q_ - 1) {
      primitive_fq_ = x;
      break;
    }
  }
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (degree() == 1) return (a + b) % p_;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    const std::uint32_t d = (a % p_ + b % p_) % p_;
    r += d * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (degree() == 1) return (p_ - a) % p_;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    r += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t group = size_ - 1;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % group];
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("division by zero");
  const std::uint64_t group = size_ - 1;
  return exp_[(group - log_[a]) % group];
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group = size_ - 1;
  return exp_[(std::uint64_t{log_[a]} * (e % group)) % group];
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
  const std::int64_t pp = p_;
  return {this, static_cast<std::uint32_t>(((v % pp) + pp) % pp)};
}

FieldElem FieldCtx::from_encoding(std::uint32_t enc) const {
  if (enc >= size_) throw DomainError("encoding out of range");
  return {this, enc};
}

FieldElem FieldCtx::from_fq_index(std::uint32_t index) const {
  if (index >= q_) {
    throw ParameterError("F_q index " + std::to_string(index) + " out of range for q = " +
                         std::to_string(q_));
  }
  return {this, fq_[index]};
}

std::optional<std::uint32_t> FieldCtx::fq_index(const FieldElem& x) const {
  if (m_ == 1) return x.encoding();
  if (!in_subfield(x, 1)) return std::nullopt;
  auto it = std::find(fq_.begin(), fq_.end(), x.encoding());
  return static_cast<std::uint32_t>(it - fq_.begin());
}

bool FieldCtx::in_subfield(const FieldElem& x, std::uint32_t e) const {
  if (e == 0 || m_ % e != 0) throw DomainError("subfield degree must divide m");
  // x^(q^e) == x  <=>  x = 0 or log x is a multiple of (q^m-1)/(q^e-1).
  if (x.encoding() == 0) return true;
  const std::uint64_t sub = ipow(q_, e) - 1;
  return log_[x.encoding()] % ((size_ - 1) / sub) == 0;
}

std::vector<std::uint32_t> FieldCtx::coefficients(const FieldElem& x) const {
  std::vector<std::uint32_t> c(degree());
  std::uint32_t v = x.encoding();
  for (auto& ci : c) {
    ci = v % p_;
    v /= p_;
  }
  return c;
}

FieldElem FieldCtx::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() != degree()) throw DomainError("coefficient vector has wrong length");
  std::uint32_t enc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw DomainError("coefficient out of range");
    enc = enc * p_ + c[i];
  }
  return {this, enc};
}

std::vector<FieldElem> FieldCtx::enumerate(std::uint32_t deg) const {
  std::vector<FieldElem> out;
  if (deg == 1) {
    out.reserve(q_);
    for (auto e : fq_) out.emplace_back(this, e);
    return out;
  }
  if (deg == 0 || m_ % deg != 0) throw DomainError("subfield degree must divide m");
  for (std::uint64_t v = 0; v < size_; ++v) {
    FieldElem x(this, static_cast<std::uint32_t>(v));
    if (deg == m_ || in_subfield(x, deg)) out.push_back(x);
  }
  return out;
}

bool FieldCtx::is_square(const FieldElem& x) const {
  if (x.is_zero()) throw DomainError("is_square: zero has no quadratic character");
  if (!in_fq(x)) throw DomainError("is_square: element not in F_q");
  return x.pow((q_ - 1) / 2).is_one();
}

std::string FieldCtx::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << degree() << ")";
  if (degree() > 1) os << " = F_" << p_ << "[a]/(" << poly_string(modulus_, 'a') << ")";
  return os.str();
}

Field make_field(std::uint32_t p, std::uint32_t n, std::uint32_t m) {
  if (p == 2) throw ParameterError("characteristic 2 unsupported");
  if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
  if (n == 0 || m == 0) throw ParameterError("extension degrees must be positive");
  const std::uint64_t q = ipow(p, n);
  if (q < 5) throw ParameterError("q = " + std::to_string(q) + " < 5 unsupported");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < n * m; ++i) {
    size *= p;
    if (size > FieldCtx::kMaxSize) {
      throw ParameterError("field of size " + std::to_string(q) + "^" + std::to_string(m) +
                           " exceeds the supported size");
    }
  }

  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, n, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const FieldCtx>(p, n, m);
  cache.emplace(key, ctx);
  return ctx;
}

void FieldElem::check_same(const FieldElem& o) const {
  if (ctx_ != o.ctx_ || ctx_ == nullptr) throw DomainError("field context mismatch");
}

bool FieldElem::is_one() const { return v_ == 1; }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  return {ctx_, ctx_->add(v_, o.v_)};
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  return {ctx_, ctx_->sub(v_, o.v_)};
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  return {ctx_, ctx_->mul(v_, o.v_)};
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return {ctx_, ctx_->mul(v_, ctx_->inv(o.v_))};
}
FieldElem FieldElem::operator-() const { return {ctx_, ctx_->neg(v_)}; }
FieldElem FieldElem::inverse() const { return {ctx_, ctx_->inv(v_)}; }
FieldElem FieldElem::pow(std::uint64_t e) const { return {ctx_, ctx_->pow(v_, e)}; }

std::uint64_t FieldElem::order() const {
  if (v_ == 0) throw DomainError("zero has no multiplicative order");
  const std::uint64_t group = ctx_->size() - 1;
  std::uint64_t ord = group;
  for (auto r : prime_factors(group)) {
    while (ord % r == 0 && ctx_->pow(v_, ord / r) == 1) ord /= r;
  }
  return ord;
}

std::string FieldElem::to_string() const {
  if (ctx_ == nullptr) return "?";
  if (v_ < ctx_->p()) return std::to_string(v_);
  auto c = ctx_->coefficients(*this);
  trim(c);
  return poly_string(c, 'a');
}

Embedding::Embedding(Field from, Field to) : from_(std::move(from)), to_(std::move(to)) {
  if (from_->p() != to_->p() || to_->degree() % from_->degree() != 0) {
    throw DomainError("no embedding between these fields");
  }
  const auto& f = from_->modulus();
  const std::uint32_t d = from_->degree();
  // Roots of the source modulus lie in the degree-d subfield of the target.
  const std::uint64_t sub_size = ipow(to_->p(), d);
  const std::uint64_t step = (to_->size() - 1) / (sub_size - 1);
  std::vector<std::uint32_t> cands{0};
  for (std::uint64_t k = 0; k < sub_size - 1; ++k) {
    cands.push_back(to_->pow(to_->generator().encoding(), k * step));
  }
  std::sort(cands.begin(), cands.end());
  for (auto c : cands) {
    std::uint32_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = to_->add(to_->mul(acc, c), f[i]);
    if (acc == 0) {
      FieldElem r(to_.get(), c);
      basis_images_.push_back(to_->one());
      for (std::uint32_t i = 1; i < d; ++i) basis_images_.push_back(basis_images_.back() * r);
      return;
    }
  }
  throw DomainError("embedding root not found");
}

FieldElem Embedding::operator()(const FieldElem& x) const {
  if (x.ctx() != from_.get()) throw DomainError("field context mismatch");
  auto c = from_->coefficients(x);
  FieldElem acc = to_->zero();
  for (std::size_t i = 0; i < c.size(); ++i) acc += to_->from_int(c[i]) * basis_images_[i];
  return acc;
}

}  // namespace galpts::gf
