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

// Finite field tower F_p ⊂ F_q ⊂ F_{q^m}.
//
// F_{q^m} is represented as a single extension F_p[x]/(f) of degree n·m
// where f is the first monic irreducible polynomial in a fixed enumeration
// order. An element is stored as its coefficient vector over F_p packed into
// one integer (base p, constant coefficient least significant); this packed
// value is the element's "encoding" and defines the enumeration order.
//
// The subfield F_q is embedded explicitly: F_q = F_p[y]/(g) is built with its
// own first irreducible g of degree n, and y is sent to the smallest root of
// g in F_{q^m}. Elements of F_q therefore carry a canonical index (their
// encoding in F_p[y]/(g)) that does not depend on m.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace galpts::gf {

class FieldCtx;
using Field = std::shared_ptr<const FieldCtx>;

/// Element of a FieldCtx. Trivially copyable; the context must outlive it.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, std::uint32_t encoding) : ctx_(ctx), v_(encoding) {}

  const FieldCtx* ctx() const { return ctx_; }
  std::uint32_t encoding() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;
  /// Multiplicative order; element must be nonzero.
  std::uint64_t order() const;

  /// Same context and same encoding.
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.ctx_ == b.ctx_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
  /// Enumeration order.
  friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.v_ < b.v_; }

  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;

  const FieldCtx* ctx_ = nullptr;
  std::uint32_t v_ = 0;
};

class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  /// Largest supported field size p^(n·m).
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 24;

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t m() const { return m_; }
  /// Degree of the field over F_p, n·m.
  std::uint32_t degree() const { return n_ * m_; }
  std::uint64_t q() const { return q_; }
  /// Number of elements, q^m.
  std::uint64_t size() const { return size_; }
  /// Monic defining polynomial over F_p, coefficients low to high (degree()+1 entries).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Defining polynomial of F_q over F_p used for the canonical F_q indices.
  const std::vector<std::uint32_t>& base_modulus() const { return base_modulus_; }

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  /// Image of an integer under Z -> F_p ⊂ F_{q^m}.
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_encoding(std::uint32_t enc) const;
  /// Element of F_q with the given canonical index (0 <= index < q).
  FieldElem from_fq_index(std::uint32_t index) const;
  /// Canonical F_q index of x, or nullopt when x is not in F_q.
  std::optional<std::uint32_t> fq_index(const FieldElem& x) const;
  bool in_fq(const FieldElem& x) const { return fq_index(x).has_value(); }
  /// True iff x lies in the subfield F_{q^e}; e must divide m.
  bool in_subfield(const FieldElem& x, std::uint32_t e) const;

  /// Coefficient vector over F_p (length degree()).
  std::vector<std::uint32_t> coefficients(const FieldElem& x) const;
  FieldElem from_coefficients(const std::vector<std::uint32_t>& c) const;

  /// Smallest-index generator of F_q^*.
  FieldElem primitive_element() const { return primitive_fq_; }
  /// Generator of F_{q^m}^* used for the log tables.
  FieldElem generator() const { return {this, gen_}; }

  /// Elements of F_q (degree 1, canonical index order) or of the whole
  /// field (degree m, encoding order). Other subfield degrees dividing m
  /// are returned in encoding order.
  std::vector<FieldElem> enumerate(std::uint32_t degree) const;

  /// x^((q-1)/2) == 1 for nonzero x in F_q.
  bool is_square(const FieldElem& x) const;

  // Raw arithmetic on encodings; FieldElem forwards here.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  std::string describe() const;

  FieldCtx(std::uint32_t p, std::uint32_t n, std::uint32_t m);

 private:
  std::uint32_t p_, n_, m_;
  std::uint64_t q_, size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> base_modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i < degree
  std::uint32_t gen_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = gen^i, i in [0, size-1)
  std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i
  std::vector<std::uint32_t> fq_;   // canonical F_q index -> encoding
  FieldElem primitive_fq_;
};

/// Cached, immutable context for F_{p^(n·m)}. Rejects p = 2, non-prime p,
/// q < 5 and oversized fields with distinct ParameterError messages.
Field make_field(std::uint32_t p, std::uint32_t n, std::uint32_t m);

/// Splits q into (p, n) with q = p^n; throws ParameterError otherwise.
std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

bool is_prime(std::uint64_t v);

/// Field homomorphism from a subfield context into a larger context with the
/// same p (source degree must divide target degree). The image of the
/// generator x of the source is the smallest root of its modulus in the target.
class Embedding {
 public:
  Embedding(Field from, Field to);
  FieldElem operator()(const FieldElem& x) const;
  const Field& from() const { return from_; }
  const Field& to() const { return to_; }

 private:
  Field from_, to_;
  std::vector<FieldElem> basis_images_;  // images of x^i
};

}  // namespace galpts::gf

template <>
struct std::hash<galpts::gf::FieldElem> {
  std::size_t operator()(const galpts::gf::FieldElem& x) const noexcept {
    return std::hash<std::uint32_t>{}(x.encoding());
  }
};
