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


// Command-line front end: verify, enumerate, search-pairs, inspect, field-info.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "galpts/gf.hpp"
#include "galpts/projective.hpp"

namespace galpts::cli {

struct RunConfig {
  std::string command;
  std::string inspect;  // flexes|ram|deck|project|multiplicity
  int theorem = 0;
  std::uint32_t p = 0, n = 0;
  std::optional<std::uint32_t> gamma;  // canonical F_q index
  std::string curve;
  std::string kind;
  std::string point;
  std::uint32_t ext = 0;  // 0: the command's default
  std::optional<std::uint32_t> deck_ext;
  std::optional<std::uint64_t> budget_points;
  std::uint64_t max_order = 8;
  double budget_seconds = 0;
  unsigned workers = 1;
  bool deterministic = false;
  std::string format = "text";
  std::string out;
};

/// "25", "5^2" -> (5, 2). Throws ParameterError for anything else.
std::pair<std::uint32_t, std::uint32_t> parse_q(const std::string& s);

/// "x:y:z" with integer coordinates. Nonnegative values below q are
/// canonical F_q indices; negative values are integers reduced mod p.
/// Throws ParameterError on malformed input or the zero vector.
Point2 parse_point2(const Field& field, const std::string& s);

/// Runs one command; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace galpts::cli
