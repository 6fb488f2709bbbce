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


#include "galpts/report.hpp"

#include <sstream>

#include "galpts/error.hpp"

namespace galpts {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass:
      return "pass";
    case Outcome::kFail:
      return "fail";
    case Outcome::kUndecided:
      return "undecided";
    case Outcome::kRefused:
      return "refused";
    case Outcome::kTruncated:
      return "truncated";
    case Outcome::kInvalid:
      break;
  }
  return "invalid";
}

void Report::append(const Report& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

bool Report::all_pass() const {
  for (const auto& c : claims) {
    if (!c.pass()) return false;
  }
  return true;
}

int exit_code(const Report& r) {
  auto any = [&](Outcome o) {
    for (const auto& c : r.claims) {
      if (c.outcome == o) return true;
    }
    return false;
  };
  if (any(Outcome::kInvalid)) return 2;
  if (any(Outcome::kFail)) return 1;
  if (any(Outcome::kUndecided)) return 3;
  if (any(Outcome::kRefused)) return 4;
  if (any(Outcome::kTruncated)) return 5;
  return 0;
}

Json to_json(const Report& r, bool deterministic) {
  Json out;
  out["schema_version"] = Report::kSchemaVersion;
  out["config"] = r.config;
  Json claims = Json::array();
  Json counts = Json::object();
  for (Outcome o : {Outcome::kPass, Outcome::kFail, Outcome::kUndecided, Outcome::kRefused,
                    Outcome::kTruncated, Outcome::kInvalid}) {
    counts[to_string(o)] = 0;
  }
  for (const auto& c : r.claims) {
    Json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["pass"] = c.pass();
    j["outcome"] = to_string(c.outcome);
    j["witness"] = c.witness;
    j["timing_ms"] = deterministic ? 0.0 : c.timing_ms;
    claims.push_back(std::move(j));
    counts[to_string(c.outcome)] = counts[to_string(c.outcome)].get<int>() + 1;
  }
  out["claims"] = std::move(claims);
  Json summary;
  summary["total"] = r.claims.size();
  summary["outcomes"] = std::move(counts);
  summary["all_pass"] = r.all_pass();
  summary["exit_code"] = exit_code(r);
  out["summary"] = std::move(summary);
  return out;
}

std::string to_text(const Report& r, bool deterministic) {
  std::ostringstream os;
  for (const auto& c : r.claims) {
    std::string tag = to_string(c.outcome);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << tag << ' ' << c.id << ": " << c.statement << " | " << c.witness.dump();
    if (!deterministic) os << " (" << static_cast<long long>(c.timing_ms) << " ms)";
    os << '\n';
  }
  int pass = 0;
  for (const auto& c : r.claims) pass += c.pass();
  os << "summary: " << pass << "/" << r.claims.size() << " pass, exit " << exit_code(r) << '\n';
  return os.str();
}

Json field_json(const gf::FieldCtx& ctx) {
  Json j;
  j["p"] = ctx.p();
  j["n"] = ctx.n();
  j["m"] = ctx.m();
  j["modulus"] = ctx.modulus();
  return j;
}

Json elem_json(const FieldElem& x) { return x.ctx()->coefficients(x); }

Json point_json(const Point1& p) {
  Json j;
  j["text"] = p.to_string();
  j["coords"] = {elem_json(p.s()), elem_json(p.t())};
  return j;
}

Json point_json(const Point2& p) {
  Json j;
  j["text"] = p.to_string();
  j["coords"] = {elem_json(p[0]), elem_json(p[1]), elem_json(p[2])};
  return j;
}

Json mobius_json(const Mobius& m) { return m.to_string(); }

Json group_json(const Subgroup& g, bool with_elements) {
  Json j;
  j["order"] = g.order();
  j["type"] = g.tag().to_string();
  j["field"] = field_json(*g.field());
  if (with_elements) {
    Json e = Json::array();
    for (const auto& x : g.elements()) e.push_back(mobius_json(x));
    j["elements"] = std::move(e);
  }
  return j;
}

namespace detail {

Claim claim_from_exception(std::string id, std::string statement, std::exception_ptr e) {
  Claim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  try {
    std::rethrow_exception(e);
  } catch (const ParameterError& ex) {
    c.outcome = Outcome::kInvalid;
    c.witness["error"] = ex.what();
  } catch (const UndecidedError& ex) {
    c.outcome = Outcome::kUndecided;
    c.witness["error"] = ex.what();
  } catch (const BudgetError& ex) {
    c.outcome = Outcome::kRefused;
    c.witness["error"] = ex.what();
    c.witness["estimate"] = ex.estimate();
  } catch (const std::exception& ex) {
    c.outcome = Outcome::kFail;
    c.witness["error"] = ex.what();
  }
  return c;
}

}  // namespace detail

}  // namespace galpts
