#ifndef CORECALC_IO_HPP
#define CORECALC_IO_HPP

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "corecalc/parse.hpp"
#include "corecalc/verify.hpp"

namespace corecalc {

using Json = nlohmann::ordered_json;

namespace io {

inline std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (!tokenize(line).empty()) lines.push_back(line);
  }
  return lines;
}

inline Field parse_field_line(const std::vector<std::string>& toks) {
  if (toks.size() >= 2 && toks[0] == "field" && toks[1] == "q")
    return Field::rationals();
  if (toks.size() >= 3 && toks[0] == "field" && toks[1] == "fp") {
    if (toks[2] == "default") return Field::prime_default();
    try {
      unsigned long p = std::stoul(toks[2]);
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const PreconditionError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad prime '" + toks[2] + "'");
    }
  }
  throw ParseError("expected 'field q' or 'field fp <prime>|default'");
}

struct RingFile {
  RingPtr ring;
  Ideal ideal;
};

// Line-oriented ring file:
//   field q | field fp <prime> | field fp default
//   vars <name>+
//   order grevlex|lex
//   gens
//   <one polynomial per line>
//   end
inline RingFile read_ring_file(const std::string& path) {
  auto lines = read_lines(path);
  std::size_t at = 0;
  auto next = [&]() -> std::vector<std::string> {
    if (at >= lines.size()) throw ParseError("unexpected end of ring file");
    return tokenize(lines[at++]);
  };
  Field field = parse_field_line(next());
  auto vars_line = next();
  if (vars_line.empty() || vars_line[0] != "vars" || vars_line.size() < 2)
    throw ParseError("expected 'vars <name>+'");
  std::vector<std::string> vars(vars_line.begin() + 1, vars_line.end());
  auto order_line = next();
  if (order_line.size() != 2 || order_line[0] != "order")
    throw ParseError("expected 'order grevlex|lex'");
  MonomialOrder order = MonomialOrder::grevlex();
  if (order_line[1] == "lex")
    order = MonomialOrder::lex();
  else if (order_line[1] != "grevlex")
    throw ParseError("unknown order '" + order_line[1] + "'");
  RingPtr ring = make_ring(field, vars, order);
  auto gens_line = next();
  if (gens_line.size() != 1 || gens_line[0] != "gens")
    throw ParseError("expected 'gens'");
  std::vector<Polynomial> gens;
  for (;;) {
    if (at >= lines.size()) throw ParseError("missing 'end' in ring file");
    std::string line = lines[at++];
    if (tokenize(line) == std::vector<std::string>{"end"}) break;
    gens.push_back(parse_polynomial(line, ring));
  }
  return {ring, Ideal(ring, std::move(gens))};
}

// Points file:
//   field ...
//   ambient <n>
//   points
//   <n+1 field literals per line>
//   end
inline PointSet read_points_file(const std::string& path) {
  auto lines = read_lines(path);
  std::size_t at = 0;
  auto next = [&]() -> std::vector<std::string> {
    if (at >= lines.size()) throw ParseError("unexpected end of points file");
    return tokenize(lines[at++]);
  };
  Field field = parse_field_line(next());
  auto ambient_line = next();
  if (ambient_line.size() != 2 || ambient_line[0] != "ambient")
    throw ParseError("expected 'ambient <n>'");
  std::size_t n = 0;
  try {
    n = std::stoul(ambient_line[1]);
  } catch (const std::exception&) {
    throw ParseError("bad ambient dimension '" + ambient_line[1] + "'");
  }
  std::vector<std::string> vars;
  for (std::size_t i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  RingPtr ring = make_ring(field, vars);
  auto points_line = next();
  if (points_line.size() != 1 || points_line[0] != "points")
    throw ParseError("expected 'points'");
  std::vector<std::vector<FieldScalar>> coords;
  for (;;) {
    if (at >= lines.size()) throw ParseError("missing 'end' in points file");
    auto toks = tokenize(lines[at++]);
    if (toks == std::vector<std::string>{"end"}) break;
    if (toks.size() != n + 1)
      throw ParseError("expected " + std::to_string(n + 1) + " coordinates");
    std::vector<FieldScalar> pt;
    for (const auto& t : toks) pt.push_back(parse_field_literal(field, t));
    coords.push_back(std::move(pt));
  }
  return PointSet(ring, std::move(coords));
}

inline bool is_points_file(const std::string& path) {
  auto lines = read_lines(path);
  return lines.size() >= 2 && !tokenize(lines[1]).empty() &&
         tokenize(lines[1])[0] == "ambient";
}

}  // namespace io

// Ideals serialize as the sorted canonical strings of the reduced basis,
// so ideal equality is visible as string equality in golden files.
inline Json ideal_to_json(const Ideal& I) {
  std::vector<std::string> strs;
  for (const auto& g : I.groebner()) strs.push_back(g.str());
  std::sort(strs.begin(), strs.end());
  return Json(strs);
}

inline Json invariants_to_json(const InvariantReport& rep) {
  Json j;
  j["dimension"] = rep.dimension;
  j["codim"] = rep.codim;
  j["multiplicity"] = rep.multiplicity;
  j["is_cm"] = rep.is_cm;
  if (rep.is_cm) {
    j["a"] = rep.a;
    j["b"] = rep.b;
    j["c"] = rep.c;
    j["type"] = rep.type;
    j["is_level"] = rep.is_level;
    j["is_gorenstein"] = rep.is_gorenstein;
    j["alpha_ub"] = rep.alpha_ub;
    j["omega_generator_degrees"] = rep.omega_generator_degrees;
  }
  return j;
}

inline Json core_to_json(const CoreResult& res) {
  Json j;
  j["n"] = res.n;
  j["method"] = res.method == CoreMethod::formula
                    ? "formula"
                    : (res.method == CoreMethod::oracle ? "oracle" : "both");
  j["inconclusive"] = res.inconclusive;
  if (res.agreement) j["agreement"] = *res.agreement;
  j["core"] = ideal_to_json(res.core);
  std::vector<std::string> sop;
  for (const auto& y : res.sop) sop.push_back(y.str());
  j["parameters"] = sop;
  return j;
}

inline Json cb_to_json(const CBReport& rep) {
  Json j;
  j["is_cb"] = rep.is_cb;
  j["a"] = rep.a;
  j["separator_degrees"] = rep.separator_degrees;
  j["core_is_power_of_m"] = rep.core_is_power;
  j["core"] = ideal_to_json(rep.core);
  std::vector<std::string> seps;
  for (const auto& f : rep.conductor_gens) seps.push_back(f.str());
  j["separators"] = seps;
  return j;
}

inline Json suite_to_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  j["inconclusive"] = rep.inconclusive;
  j["all_pass"] = rep.all_pass();
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["status"] = c.status == Check::Status::pass
                       ? "pass"
                       : (c.status == Check::Status::fail ? "fail" : "skip");
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace corecalc

#endif  // CORECALC_IO_HPP
