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


// Claim-by-claim verification reports and their JSON and text forms.

#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "galpts/mobius.hpp"
#include "galpts/pgl2.hpp"
#include "galpts/projective.hpp"

namespace galpts {

using Json = nlohmann::ordered_json;

enum class Outcome { kPass, kFail, kUndecided, kRefused, kTruncated, kInvalid };

std::string to_string(Outcome o);

struct Claim {
  std::string id;
  std::string statement;
  Outcome outcome = Outcome::kFail;
  Json witness = Json::object();
  double timing_ms = 0;

  bool pass() const { return outcome == Outcome::kPass; }
};

struct Report {
  static constexpr const char* kSchemaVersion = "1";

  Json config = Json::object();
  std::vector<Claim> claims;

  void add(Claim c) { claims.push_back(std::move(c)); }
  void append(const Report& other);
  bool all_pass() const;
};

/// Exit status for a report: 2 invalid parameters, 1 false claim,
/// 3 undecided, 4 budget refusal, 5 truncated, 0 otherwise. The first
/// category present in that order wins.
int exit_code(const Report& r);

/// {schema_version, config, claims, summary}. Timings are zeroed when
/// deterministic is set.
Json to_json(const Report& r, bool deterministic);
/// One line per claim: "PASS id: statement | witness".
std::string to_text(const Report& r, bool deterministic);

/// Times a claim body; exceptions from the galpts hierarchy become claim
/// outcomes (ParameterError -> invalid, UndecidedError -> undecided,
/// BudgetError -> refused, others -> fail).
template <typename F>
Claim run_claim(std::string id, std::string statement, F&& body);

// JSON encodings. Field elements are coefficient vectors over F_p in the
// basis 1, x, x^2, ... of the context's modulus.
Json field_json(const gf::FieldCtx& ctx);
Json elem_json(const FieldElem& x);
Json point_json(const Point1& p);
Json point_json(const Point2& p);
Json mobius_json(const Mobius& m);
Json group_json(const Subgroup& g, bool with_elements);

namespace detail {
Claim claim_from_exception(std::string id, std::string statement, std::exception_ptr e);
}

template <typename F>
Claim run_claim(std::string id, std::string statement, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Claim c;
  try {
    c = body();
    c.id = id;
    c.statement = statement;
  } catch (...) {
    c = detail::claim_from_exception(id, statement, std::current_exception());
  }
  c.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return c;
}

/// Claim with the given outcome and witness, for use inside run_claim bodies.
inline Claim verdict(bool ok, Json witness) {
  Claim c;
  c.outcome = ok ? Outcome::kPass : Outcome::kFail;
  c.witness = std::move(witness);
  return c;
}

}  // namespace galpts
