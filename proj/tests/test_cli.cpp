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


#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "galpts/cli.hpp"
#include "galpts/error.hpp"
#include "galpts/galois.hpp"
#include "support.hpp"

using namespace galpts;
using namespace galpts::testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run galpts_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "galpts");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json parse(const Run& r) { return Json::parse(r.out); }

std::vector<Json> lines(const std::string& s) {
  std::vector<Json> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(Json::parse(line));
  return out;
}

const Json& claim(const Json& report, const std::string& id) {
  for (const auto& c : report["claims"]) {
    if (c["id"] == id) return c;
  }
  FAIL("missing claim " << id);
  throw std::logic_error("unreachable");
}

std::set<std::string> element_strings(const Subgroup& g) {
  std::set<std::string> out;
  for (const auto& x : g.elements()) out.insert(x.to_string());
  return out;
}

std::set<std::string> element_strings(const Json& g) {
  std::set<std::string> out;
  for (const auto& x : g["elements"]) out.insert(x.get<std::string>());
  return out;
}

}  // namespace

TEST_CASE("parse_q") {
  CHECK(cli::parse_q("25") == std::pair<std::uint32_t, std::uint32_t>{5, 2});
  CHECK(cli::parse_q("5^2") == std::pair<std::uint32_t, std::uint32_t>{5, 2});
  CHECK(cli::parse_q("7") == std::pair<std::uint32_t, std::uint32_t>{7, 1});
  for (const char* bad : {"6", "4^2", "x", "", "5^", "^2", "5^0", "-5"}) {
    CHECK_THROWS_AS(cli::parse_q(bad), ParameterError);
  }
}

TEST_CASE("parse_point2") {
  auto f = prime_field(5);
  CHECK(cli::parse_point2(f, "0:1:0") == Point2::from_ints(f, 0, 1, 0));
  CHECK(cli::parse_point2(f, "2:4:2") == Point2::from_ints(f, 1, 2, 1));
  CHECK(cli::parse_point2(f, "1:-1:0") == Point2::from_ints(f, 1, 4, 0));
  for (const char* bad : {"0:1", "0:1:0:1", "a:b:c", "0:0:0", "5:0:1", "1::0", "1:0:", ""}) {
    CHECK_THROWS_AS(cli::parse_point2(f, bad), ParameterError);
  }
}

TEST_CASE("verify examples") {
  const Run t1 = galpts_cli({"verify", "--theorem", "1", "--q", "5"});
  CHECK(t1.code == 0);
  CHECK(t1.out.find("PASS thm1.a:") != std::string::npos);
  CHECK(t1.out.find("PASS thm1.b:") != std::string::npos);
  CHECK(t1.out.find("PASS thm1.c:") != std::string::npos);

  CHECK(galpts_cli({"verify", "--theorem", "3", "--q", "5", "--gamma", "2"}).code == 0);

  const Run bad = galpts_cli({"verify", "--theorem", "3", "--q", "5", "--gamma", "1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("γ ∉ F_q \\ {0, ±1}") != std::string::npos);

  CHECK(galpts_cli({"verify", "--theorem", "5", "--q", "5"}).code == 2);
  CHECK(galpts_cli({"verify", "--theorem", "1", "--q", "12"}).code == 2);
  CHECK(galpts_cli({"verify", "--q", "5"}).code == 2);
}

TEST_CASE("verify reports the part (c) restriction and refuses oversized scans") {
  const Json r = parse(galpts_cli({"verify", "--theorem", "1", "--q", "5", "--format", "json"}));
  CHECK(claim(r, "thm1.c")["statement"].get<std::string>().find("finite-rational") !=
        std::string::npos);
  const Run small = galpts_cli({"verify", "--theorem", "1", "--q", "5", "--budget-points", "3"});
  CHECK(small.code == 4);
  CHECK(small.out.find("REFUSED thm1.c") != std::string::npos);
}

TEST_CASE("enumerate examples") {
  const Json c1 = parse(galpts_cli(
      {"enumerate", "--curve", "c1", "--q", "5", "--kind", "inner", "--ext", "2", "--format", "json"}));
  CHECK(c1["summary"]["exit_code"] == 0);
  CHECK(claim(c1, "enumerate")["witness"]["count"] == 2);

  const Run c4 = galpts_cli({"enumerate", "--curve", "c4", "--q", "7", "--gamma", "2", "--kind", "outer",
                             "--ext", "1", "--format", "json"});
  CHECK(c4.code == 0);
  const Json j4 = Json::parse(c4.out);
  CHECK(claim(j4, "enumerate")["witness"]["count"].get<int>() >= 2);
  CHECK(j4["config"]["label"] == "exploratory, no claim");

  const Run refused = galpts_cli({"enumerate", "--curve", "c3", "--q", "9", "--gamma", "3", "--kind",
                                  "outer", "--ext", "2", "--budget-points", "100"});
  CHECK(refused.code == 4);
  CHECK(refused.err.find("estimate") != std::string::npos);

  CHECK(galpts_cli({"enumerate", "--curve", "c1", "--q", "5", "--kind", "sideways"}).code == 2);
  CHECK(galpts_cli({"enumerate", "--curve", "c9", "--q", "5", "--kind", "inner"}).code == 2);
}

TEST_CASE("search-pairs examples") {
  const Run r = galpts_cli({"search-pairs", "--q", "5", "--max-order", "8", "--format", "json"});
  CHECK(r.code == 0);
  auto f = prime_field(5);
  const auto h1 = element_strings(closure(f, {lemma_sigma(f), lemma_tau(f)}, 100));
  const auto h2 = element_strings(closure(f, {lemma_eta(f)}, 100));
  const auto stream = lines(r.out);
  REQUIRE(stream.size() > 1);
  bool hit = false;
  for (std::size_t i = 0; i + 1 < stream.size(); ++i) {
    const Json& cert = stream[i]["certificate"];
    CHECK(stream[i]["recheck"] == true);
    const auto a = element_strings(cert["H1"]);
    const auto b = element_strings(cert["H2"]);
    hit = hit || (a == h1 && b == h2) || (a == h2 && b == h1);
  }
  CHECK(hit);
  const Json& footer = stream.back()["summary"];
  CHECK(footer["certificates"] == stream.size() - 1);
  CHECK(footer["truncated"] == false);

  // Not empty: pairs of involutions always match (see the galois tests).
  const Run two = galpts_cli({"search-pairs", "--q", "5", "--max-order", "2"});
  CHECK(two.code == 0);
  CHECK(two.out.find("CERT ") != std::string::npos);

  const Run big = galpts_cli({"search-pairs", "--q", "7", "--max-order", "100000"});
  CHECK(big.code == 5);
  CHECK(big.out.find("truncated") != std::string::npos);
}

TEST_CASE("inspect examples") {
  const Json flexes = parse(galpts_cli(
      {"inspect", "flexes", "--curve", "c3", "--q", "5", "--gamma", "2", "--format", "json"}));
  CHECK(claim(flexes, "inspect.flexes")["witness"]["count"] == 4);

  const Json deck = parse(galpts_cli(
      {"inspect", "deck", "--curve", "c1", "--q", "5", "--point", "0:1:0", "--format", "json"}));
  const Json& g = claim(deck, "inspect.deck")["witness"]["group"];
  CHECK(g["order"] == 4);
  CHECK(g["type"] == "dihedral-of-order 4");

  const Json ram = parse(galpts_cli(
      {"inspect", "ram", "--curve", "c2", "--q", "5", "--point", "0:0:1", "--format", "json"}));
  const Json& pts = claim(ram, "inspect.ram")["witness"]["ramified"];
  REQUIRE(pts.size() == 2);
  CHECK(pts[0]["index"] == 3);
  CHECK(pts[1]["index"] == 3);

  const Json mult = parse(galpts_cli(
      {"inspect", "multiplicity", "--curve", "c1", "--q", "5", "--point", "0:0:1", "--format", "json"}));
  CHECK(claim(mult, "inspect.multiplicity")["witness"]["multiplicity"] == 2);

  CHECK(galpts_cli({"inspect", "ram", "--curve", "c2", "--q", "5", "--point", "0:0"}).code == 2);
  CHECK(galpts_cli({"inspect", "ram", "--curve", "c2", "--q", "5", "--point", "x:y:z"}).code == 2);
  CHECK(galpts_cli({"inspect", "ram", "--curve", "c2", "--q", "5"}).code == 2);
  CHECK(galpts_cli({"inspect", "hessian", "--curve", "c2", "--q", "5"}).code == 2);
}

TEST_CASE("field-info") {
  const Json r = parse(galpts_cli({"field-info", "--q", "3^2", "--format", "json"}));
  const Json& w = claim(r, "field")["witness"];
  CHECK(w["size"] == 9);
  CHECK(w["fq_elements"].size() == 9);
  CHECK(galpts_cli({"field-info", "--q", "6"}).code == 2);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--theorem", "3", "--q", "7", "--gamma", "3", "--format", "json"},
           {"verify", "--theorem", "3", "--q", "5", "--gamma", "1", "--format", "json"},
           {"inspect", "deck", "--curve", "c1", "--q", "5", "--point", "1:0:0", "--format", "json"},
           {"field-info", "--q", "25", "--ext", "2", "--format", "json"}}) {
    const Run r = galpts_cli(args);
    CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
    CHECK(Json::parse(r.out)["summary"]["exit_code"] == r.code);
  }
  const Run s = galpts_cli({"search-pairs", "--q", "5", "--max-order", "4", "--format", "json"});
  std::string again;
  for (const auto& j : lines(s.out)) again += j.dump() + "\n";
  CHECK(again == s.out);
}

TEST_CASE("deterministic output is identical across runs and worker counts") {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"verify", "--theorem", "3", "--q", "7", "--gamma", "3"},
           {"verify", "--theorem", "1", "--q", "7"},
           {"enumerate", "--curve", "c2", "--q", "5", "--kind", "inner", "--ext", "2"},
           {"search-pairs", "--q", "5", "--max-order", "8"}}) {
    for (const char* format : {"text", "json"}) {
      auto args = base;
      args.insert(args.end(), {"--deterministic", "--format", format});
      auto one = args, many = args;
      one.insert(one.end(), {"--workers", "1"});
      many.insert(many.end(), {"--workers", "3"});
      const Run a = galpts_cli(one);
      const Run b = galpts_cli(many);
      const Run c = galpts_cli(many);
      CHECK(a.out == b.out);
      CHECK(b.out == c.out);
      CHECK(a.code == b.code);
    }
  }
}

TEST_CASE("--out writes the report to a file") {
  const std::string path = "test_cli_out.json";
  const Run r = galpts_cli({"verify", "--theorem", "1", "--q", "5", "--format", "json", "--out", path,
                            "--deterministic"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const Json j = Json::parse(in);
  CHECK(j["summary"]["all_pass"] == true);
  std::remove(path.c_str());
}

TEST_CASE("help and usage errors") {
  CHECK(galpts_cli({"--help"}).code == 0);
  CHECK(galpts_cli({}).code == 2);
  CHECK(galpts_cli({"frobnicate"}).code == 2);
  CHECK(galpts_cli({"verify", "--theorem", "1", "--q", "5", "--format", "xml"}).code == 2);
}
