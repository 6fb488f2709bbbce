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


#include "galpts/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "galpts/error.hpp"
#include "galpts/galois.hpp"

namespace galpts::cli {

namespace {

constexpr std::uint64_t kDefaultPointBudget = 20000;
constexpr std::uint64_t kDefaultWorkBudget = 2000000;

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
    throw ParameterError("malformed " + what + " '" + s + "'");
  }
  return std::stoull(s);
}

std::uint64_t q_of(const RunConfig& c) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < c.n; ++i) q *= c.p;
  return q;
}

std::vector<std::uint32_t> ladder(const RunConfig& c) {
  return c.deck_ext ? ladder_from(*c.deck_ext) : default_ladder();
}

Json config_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (!c.inspect.empty()) j["inspect"] = c.inspect;
  if (c.theorem) j["theorem"] = c.theorem;
  if (c.p) {
    j["p"] = c.p;
    j["n"] = c.n;
    j["q"] = q_of(c);
  }
  if (c.gamma) j["gamma"] = *c.gamma;
  if (!c.curve.empty()) j["curve"] = c.curve;
  if (!c.kind.empty()) j["kind"] = c.kind;
  if (!c.point.empty()) j["point"] = c.point;
  if (c.ext) j["ext"] = c.ext;
  j["deck_ladder"] = ladder(c);
  return j;
}

CurveMap curve_of(const RunConfig& c) {
  const auto label = parse_curve_label(c.curve);
  if (!label) throw ParameterError("unknown curve '" + c.curve + "' (expected c1|c2|c3|c4)");
  return make_curve(*label, q_of(c), c.gamma);
}

CurveMap lifted(const CurveMap& phi, std::uint32_t e) {
  if (e <= 1) return phi;
  const Field& f = phi.field();
  return embed(gf::Embedding(f, gf::make_field(f->p(), f->n(), e)), phi);
}

Point2 lift(const Point2& p, const Field& to) {
  const gf::Embedding emb(p[0].ctx()->shared_from_this(), to);
  return Point2(emb(p[0]), emb(p[1]), emb(p[2]));
}

Report cmd_verify(const RunConfig& c) {
  if (c.theorem < 1 || c.theorem > 4) throw ParameterError("--theorem must be 1, 2, 3 or 4");
  TheoremOptions opt;
  opt.scan.scan_ext = c.ext;
  opt.scan.deck_ladder = ladder(c);
  opt.scan.budget_points = c.budget_points.value_or(kDefaultPointBudget);
  opt.scan.budget_seconds = c.budget_seconds;
  opt.scan.workers = c.workers;
  Report r = theorem_report(c.theorem, q_of(c), c.gamma, opt);
  r.config = config_json(c);
  return r;
}

Report cmd_enumerate(const RunConfig& c) {
  const auto kind = parse_point_kind(c.kind);
  if (!kind || *kind == PointKind::kIneligible) {
    throw ParameterError("--kind must be inner or outer");
  }
  const CurveMap phi = curve_of(c);
  ScanOptions opt;
  opt.scan_ext = c.ext ? c.ext : 1;
  opt.deck_ladder = ladder(c);
  opt.budget_points = c.budget_points.value_or(kDefaultPointBudget);
  opt.budget_seconds = c.budget_seconds;
  opt.workers = c.workers;
  const bool exploratory = phi.label() == CurveLabel::kC4 || phi.label() == CurveLabel::kCustom;

  Report r;
  r.config = config_json(c);
  if (exploratory) r.config["label"] = "exploratory, no claim";
  std::string statement = to_string(*kind) + " Galois points of " + to_string(phi.label()) +
                          " among F_{q^" + std::to_string(opt.scan_ext) + "}-rational candidates";
  if (exploratory) statement += " (exploratory, no claim)";
  r.add(run_claim("enumerate", statement, [&] {
    const Enumeration e = enumerate_galois_points(phi, *kind, opt);
    Json pts = Json::array();
    for (const auto& v : e.galois) pts.push_back(verdict_json(v));
    Json w;
    w["count"] = e.galois.size();
    w["points"] = std::move(pts);
    w["candidates"] = e.candidates;
    w["pruned"] = e.pruned;
    w["deck_checked"] = e.deck_checked;
    Json und = Json::array();
    for (const auto& p : e.undecided) und.push_back(point_json(p));
    w["undecided"] = std::move(und);
    w["truncated"] = e.truncated;
    Claim cl = verdict(true, std::move(w));
    if (!e.undecided.empty()) cl.outcome = Outcome::kUndecided;
    if (e.truncated) cl.outcome = Outcome::kTruncated;
    return cl;
  }));
  return r;
}

std::string group_text(const Subgroup& g) {
  std::string s = g.tag().to_string() + " {";
  for (std::size_t i = 0; i < g.elements().size(); ++i) {
    s += (i ? ", " : "") + g.elements()[i].to_string();
  }
  return s + "}";
}

std::string points_text(const std::vector<Point1>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "]";
}

// Streams certificates, one per line, then a summary line.
int cmd_search_pairs(const RunConfig& c, std::ostream& os) {
  if (c.n == 0) throw ParameterError("--q is required");
  if (c.max_order < 1) throw ParameterError("--max-order must be positive");
  PairSearchOptions opt;
  opt.max_order = c.max_order;
  opt.work_budget = c.budget_points.value_or(kDefaultWorkBudget);
  opt.budget_seconds = c.budget_seconds;
  opt.workers = c.workers;
  if (opt.work_budget == 0) throw ParameterError("--budget-points must be positive");
  const PairSearch s = problem_pair_search(q_of(c), opt);

  bool all_ok = true;
  const bool json = c.format == "json";
  for (const auto& cert : s.certificates) {
    const PairCertificate again = problem_pair_check(cert.h1, cert.h2, cert.p1, cert.p2);
    const bool ok = again.condition_a && again.condition_b;
    all_ok = all_ok && ok;
    if (json) {
      Json j;
      j["certificate"] = certificate_json(cert);
      j["recheck"] = ok;
      os << j.dump() << '\n';
    } else {
      os << (ok ? "CERT " : "FAIL ") << "H1 = " << group_text(cert.h1)
         << " | H2 = " << group_text(cert.h2) << " | P1 = " << cert.p1.to_string()
         << " | P2 = " << cert.p2.to_string() << " | orbit = " << points_text(cert.orbit_h1_p2)
         << " | passing point pairs = " << cert.passing_point_pairs << '\n';
    }
  }
  const int code = !all_ok ? 1 : s.truncated ? 5 : 0;
  if (json) {
    Json sum;
    sum["config"] = config_json(c);
    sum["config"]["max_order"] = c.max_order;
    sum["config"]["work_budget"] = opt.work_budget;
    sum["certificates"] = s.certificates.size();
    sum["subgroups"] = s.subgroups;
    sum["subgroup_pairs"] = s.subgroup_pairs;
    sum["work"] = s.work;
    sum["truncated"] = s.truncated;
    sum["exit_code"] = code;
    os << Json{{"summary", sum}}.dump() << '\n';
  } else {
    os << "summary: " << s.certificates.size() << " certificates, " << s.subgroups
       << " subgroups, " << s.subgroup_pairs << " equal-order pairs, work " << s.work
       << (s.truncated ? ", truncated" : "") << ", exit " << code << '\n';
  }
  return code;
}

Report cmd_inspect(const RunConfig& c) {
  const CurveMap base = curve_of(c);
  const std::uint32_t e = c.ext ? c.ext : 1;
  const CurveMap phi = lifted(base, e);
  std::optional<Point2> pt;
  if (c.inspect != "flexes") {
    if (c.point.empty()) throw ParameterError("--point is required for inspect " + c.inspect);
    pt = lift(parse_point2(base.field(), c.point), phi.field());
  }
  Report r;
  r.config = config_json(c);
  if (c.inspect == "flexes") {
    r.add(run_claim("inspect.flexes", "flexes of " + to_string(base.label()) + " over F_{q^" +
                                          std::to_string(e) + "}",
                    [&] {
                      Json list = Json::array();
                      const auto flexes = hessian_flexes(phi, e);
                      for (const auto& f : flexes) {
                        list.push_back({{"source", point_json(f.source)}, {"image", point_json(f.image)}});
                      }
                      return verdict(true, {{"count", flexes.size()}, {"flexes", list}});
                    }));
  } else if (c.inspect == "ram") {
    r.add(run_claim("inspect.ram", "ramification of the projection from " + c.point, [&] {
      const RatMap f = project(phi, *pt);
      Json list = Json::array();
      for (const auto& [p, idx] : ramification_profile(f, e)) {
        list.push_back({{"point", point_json(p)}, {"index", idx}, {"wild", idx % phi.field()->p() == 0}});
      }
      return verdict(true, {{"map", f.to_string()}, {"degree", f.form_degree()}, {"ramified", list}});
    }));
  } else if (c.inspect == "deck") {
    r.add(run_claim("inspect.deck", "deck group of the projection from " + c.point, [&] {
      const RatMap f = project(phi, *pt);
      if (f.form_degree() < 2) throw DomainError("projection has degree below 2");
      const DeckResult d = deck_group_ladder(f, ladder(c), f.form_degree());
      Json w;
      w["map"] = f.to_string();
      w["degree"] = f.form_degree();
      w["galois"] = d.group.order() == f.form_degree();
      w["extension_used"] = d.extension_used;
      w["group"] = group_json(d.group, true);
      return verdict(true, std::move(w));
    }));
  } else if (c.inspect == "project") {
    r.add(run_claim("inspect.project", "projection from " + c.point, [&] {
      const RatMap f = project(phi, *pt);
      return verdict(true, {{"map", f.to_string()},
                            {"degree", f.form_degree()},
                            {"degree_drop", phi.degree() - f.form_degree()}});
    }));
  } else if (c.inspect == "multiplicity") {
    r.add(run_claim("inspect.multiplicity", "multiplicity of the curve at " + c.point, [&] {
      const std::uint32_t m = degree_drop(phi, *pt);
      const char* where = m == 0 ? "off the curve" : m == 1 ? "smooth" : "singular";
      return verdict(true, {{"multiplicity", m}, {"classification", where}});
    }));
  } else {
    throw ParameterError("unknown inspect target '" + c.inspect + "'");
  }
  return r;
}

Report cmd_field_info(const RunConfig& c) {
  const std::uint32_t m = c.ext ? c.ext : 1;
  const Field f = gf::make_field(c.p, c.n, m);
  Report r;
  r.config = config_json(c);
  r.add(run_claim("field", "F_{q^m} with q = p^n", [&] {
    Json w;
    w["field"] = field_json(*f);
    w["size"] = f->size();
    w["primitive_element"] = elem_json(f->primitive_element());
    if (f->q() <= 64) {
      Json fq = Json::array();
      for (std::uint32_t i = 0; i < f->q(); ++i) {
        const FieldElem x = f->from_fq_index(i);
        fq.push_back({{"index", i}, {"element", elem_json(x)}, {"text", x.to_string()}});
      }
      w["fq_elements"] = std::move(fq);
    }
    return verdict(true, std::move(w));
  }));
  return r;
}

void emit(const Report& r, const RunConfig& c, std::ostream& os) {
  if (c.format == "json") {
    os << to_json(r, c.deterministic).dump(2) << '\n';
  } else {
    os << to_text(r, c.deterministic);
  }
}

void report_diagnostics(const Report& r, std::ostream& err) {
  for (const auto& cl : r.claims) {
    if (cl.outcome == Outcome::kInvalid || cl.outcome == Outcome::kRefused) {
      err << "galpts: " << cl.id << ": " << cl.witness.value("error", std::string("rejected"));
      if (cl.witness.contains("estimate")) err << " (estimate " << cl.witness["estimate"].dump() << ")";
      err << '\n';
    }
  }
}

int dispatch(RunConfig& c, std::ostream& os, std::ostream& err) {
  if (c.command == "search-pairs") return cmd_search_pairs(c, os);
  Report r;
  if (c.command == "verify") {
    r = cmd_verify(c);
  } else if (c.command == "enumerate") {
    r = cmd_enumerate(c);
  } else if (c.command == "inspect") {
    r = cmd_inspect(c);
  } else {
    r = cmd_field_info(c);
  }
  emit(r, c, os);
  report_diagnostics(r, err);
  return exit_code(r);
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> parse_q(const std::string& s) {
  const auto caret = s.find('^');
  if (caret == std::string::npos) return gf::split_prime_power(parse_uint(s, "q"));
  const std::uint64_t p = parse_uint(s.substr(0, caret), "q");
  const std::uint64_t n = parse_uint(s.substr(caret + 1), "q");
  const auto [pp, e] = gf::split_prime_power(p);
  if (e != 1) throw ParameterError("q = " + s + ": the base must be prime");
  if (n == 0 || n > 32) throw ParameterError("q = " + s + ": exponent out of range");
  return {pp, static_cast<std::uint32_t>(n)};
}

Point2 parse_point2(const Field& field, const std::string& s) {
  std::vector<FieldElem> xs;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ':')) {
    const bool neg = !tok.empty() && tok[0] == '-';
    const std::uint64_t v = parse_uint(neg ? tok.substr(1) : tok, "point coordinate");
    if (neg) {
      xs.push_back(field->from_int(-static_cast<std::int64_t>(v)));
    } else if (v < field->q()) {
      xs.push_back(field->from_fq_index(static_cast<std::uint32_t>(v)));
    } else {
      throw ParameterError("point coordinate " + tok + " is not an F_q index");
    }
  }
  if (xs.size() != 3 || s.back() == ':') {
    throw ParameterError("malformed point '" + s + "' (expected x:y:z)");
  }
  if (xs[0].is_zero() && xs[1].is_zero() && xs[2].is_zero()) {
    throw ParameterError("(0:0:0) is not a projective point");
  }
  return Point2(xs[0], xs[1], xs[2]);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string q;
  CLI::App app{"Galois points of rational plane curves over finite fields", "galpts"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", c.out, "write the report to this path");
    sub->add_flag("--deterministic", c.deterministic, "zero timings for reproducible output");
  };
  auto field_opts = [&](CLI::App* sub, bool need_q) {
    auto* o = sub->add_option("--q", q, "field size as an integer or p^n");
    if (need_q) o->required();
  };
  auto curve_opts = [&](CLI::App* sub) {
    sub->add_option("--curve", c.curve, "c1|c2|c3|c4")->required();
    sub->add_option("--gamma", c.gamma, "γ as a canonical F_q index");
  };
  auto scan_opts = [&](CLI::App* sub) {
    sub->add_option("--deck-ext", c.deck_ext, "deck-group ladder start m (tries m, 2m, 3m)")
        ->check(CLI::Range(1u, 64u));
    sub->add_option("--budget-points", c.budget_points, "maximum scan size");
    sub->add_option("--budget-seconds", c.budget_seconds, "wall-clock limit (0 = none)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto* verify = app.add_subcommand("verify", "check the claims of one theorem");
  verify->add_option("--theorem", c.theorem, "theorem index 1..4")->required();
  field_opts(verify, true);
  verify->add_option("--gamma", c.gamma, "γ as a canonical F_q index");
  verify->add_option("--ext", c.ext, "scan extension for part (c)")->check(CLI::Range(1u, 8u));
  scan_opts(verify);
  common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "scan rational points for Galois points");
  field_opts(enumerate, true);
  curve_opts(enumerate);
  enumerate->add_option("--kind", c.kind, "inner|outer")->required();
  enumerate->add_option("--ext", c.ext, "scan extension e")->check(CLI::Range(1u, 8u));
  scan_opts(enumerate);
  common(enumerate);

  auto* search = app.add_subcommand("search-pairs", "search subgroup pairs with conditions (a), (b)");
  field_opts(search, true);
  search->add_option("--max-order", c.max_order, "largest subgroup order");
  search->add_option("--budget-points", c.budget_points, "work budget");
  search->add_option("--budget-seconds", c.budget_seconds, "wall-clock limit (0 = none)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--workers", c.workers, "worker threads")->check(CLI::Range(1u, 256u));
  common(search);

  auto* inspect = app.add_subcommand("inspect", "analyse one curve");
  inspect->add_option("what", c.inspect, "flexes|ram|deck|project|multiplicity")
      ->required()
      ->check(CLI::IsMember({"flexes", "ram", "deck", "project", "multiplicity"}));
  field_opts(inspect, true);
  curve_opts(inspect);
  inspect->add_option("--point", c.point, "x:y:z");
  inspect->add_option("--ext", c.ext, "work over F_{q^e}")->check(CLI::Range(1u, 8u));
  inspect->add_option("--deck-ext", c.deck_ext, "deck-group ladder start m")->check(CLI::Range(1u, 64u));
  common(inspect);

  auto* info = app.add_subcommand("field-info", "describe F_{q^m}");
  field_opts(info, true);
  info->add_option("--ext", c.ext, "extension degree m")->check(CLI::Range(1u, 8u));
  common(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    std::tie(c.p, c.n) = parse_q(q);
    if (c.out.empty()) return dispatch(c, out, err);
    std::ofstream file(c.out);
    if (!file) throw ParameterError("cannot open " + c.out + " for writing");
    return dispatch(c, file, err);
  } catch (const ParameterError& e) {
    err << "galpts: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "galpts: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return 4;
  } catch (const UndecidedError& e) {
    err << "galpts: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "galpts: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace galpts::cli
