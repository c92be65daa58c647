// corecalc: exact computations around cores of powers of the maximal
// ideal, canonical-module annihilators, and Cayley-Bacharach point sets.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "corecalc/corecalc.hpp"

namespace {

using namespace corecalc;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CORECALC_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("CORECALC_SEED is not an integer");
    }
  }
  return 0;
}

struct Output {
  bool json = false;
  Json doc;

  void plain(const std::string& line) {
    if (!json) std::cout << line << "\n";
  }
  void finish() {
    if (json) std::cout << doc.dump(2) << "\n";
  }
};

void print_suite(Output& out, const SuiteReport& rep) {
  for (const auto& c : rep.checks) {
    const char* tag = c.status == Check::Status::pass
                          ? "PASS"
                          : (c.status == Check::Status::fail ? "FAIL" : "SKIP");
    out.plain(std::string("[") + tag + "] " + c.name +
              (c.note.empty() ? "" : " -- " + c.note));
  }
}

int cmd_invariants(const std::string& file, std::uint64_t seed, Output& out) {
  auto rf = io::read_ring_file(file);
  Rng rng(seed);
  auto rep = invariants(rf.ideal, rng);
  out.doc["command"] = "invariants";
  out.doc["input"] = file;
  out.doc["field"] = rf.ring->field.description();
  out.doc["seed"] = seed;
  out.doc["report"] = invariants_to_json(rep);
  out.plain("dimension    " + std::to_string(rep.dimension));
  out.plain("codim        " + std::to_string(rep.codim));
  out.plain("multiplicity " + std::to_string(rep.multiplicity));
  out.plain(std::string("cohen-macaulay ") + (rep.is_cm ? "yes" : "no"));
  if (rep.is_cm) {
    out.plain("a " + std::to_string(rep.a) + "  b " + std::to_string(rep.b) +
              "  c " + std::to_string(rep.c));
    out.plain("type " + std::to_string(rep.type) +
              (rep.is_gorenstein ? "  (Gorenstein)"
                                 : (rep.is_level ? "  (level)" : "")));
    out.plain("alpha upper bound " + std::to_string(rep.alpha_ub));
  } else {
    out.plain("a/b/c/type unavailable: the quotient is not Cohen-Macaulay");
  }
  return kExitOk;
}

int cmd_core(const std::string& file, int power, const std::string& method,
             bool assert_geom_reduced, std::uint64_t seed, Output& out) {
  auto rf = io::read_ring_file(file);
  // the colon formula needs char 0, or positive characteristic with a
  // geometrically reduced quotient; the latter is the caller's assertion
  if (!rf.ring->field.is_rationals() && !assert_geom_reduced)
    std::cerr << "note: char p > 0; assuming the quotient is geometrically "
                 "reduced (pass --geometrically-reduced to assert)\n";
  Rng rng(seed);
  CoreResult res;
  if (method == "formula")
    res = core_formula(rf.ideal, power, rng);
  else if (method == "oracle")
    res = core_oracle(rf.ideal, power, rng);
  else
    res = core_both(rf.ideal, power, rng);
  out.doc["command"] = "core";
  out.doc["input"] = file;
  out.doc["field"] = rf.ring->field.description();
  out.doc["seed"] = seed;
  out.doc["result"] = core_to_json(res);
  out.plain("core(m^" + std::to_string(power) + ") =");
  for (const auto& g : ideal_to_json(res.core))
    out.plain("  " + g.get<std::string>());
  if (res.agreement) {
    out.plain(std::string("formula/oracle agreement: ") +
              (*res.agreement ? "yes" : "NO"));
    if (!*res.agreement) return kExitAssertionFailure;
  }
  if (res.inconclusive) {
    out.plain("oracle inconclusive: stabilization cap reached");
    return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_points(const std::string& file, const std::string& sub,
               const std::string& z_list, const std::string& f_text,
               std::uint64_t seed, Output& out) {
  PointSet X = io::read_points_file(file);
  Rng rng(seed);
  out.doc["command"] = "points/" + sub;
  out.doc["input"] = file;
  out.doc["field"] = X.ring()->field.description();
  out.doc["seed"] = seed;

  if (sub == "hf") {
    const Ideal& I = X.vanishing_ideal();
    std::vector<long long> hf;
    for (int deg = 0; deg <= static_cast<int>(X.size()) + 1; ++deg)
      hf.push_back(hilbert_function(I, deg));
    out.doc["hilbert_function"] = hf;
    out.doc["ideal"] = ideal_to_json(I);
    std::string line = "HF:";
    for (auto v : hf) line += " " + std::to_string(v);
    out.plain(line);
  } else if (sub == "separators") {
    out.doc["separator_degrees"] = X.separator_degrees();
    std::vector<std::string> seps;
    for (const auto& f : X.minimal_separators()) seps.push_back(f.str());
    out.doc["separators"] = seps;
    for (std::size_t i = 0; i < seps.size(); ++i)
      out.plain("f" + std::to_string(i) + " (deg " +
                std::to_string(X.separator_degrees()[i]) + ") = " + seps[i]);
  } else if (sub == "conductor") {
    Ideal C = conductor(X, rng);
    out.doc["conductor"] = ideal_to_json(C);
    for (const auto& g : ideal_to_json(C)) out.plain(g.get<std::string>());
  } else if (sub == "core") {
    auto res = core_of_points(X, rng);
    out.doc["result"] = core_to_json(res);
    for (const auto& g : ideal_to_json(res.core)) out.plain(g.get<std::string>());
    if (res.inconclusive) return kExitInconclusive;
  } else if (sub == "cb") {
    auto rep = cayley_bacharach(X, rng);
    out.doc["report"] = cb_to_json(rep);
    out.plain(std::string("cayley-bacharach: ") + (rep.is_cb ? "yes" : "no"));
    out.plain("a = " + std::to_string(rep.a) + ", core " +
              (rep.core_is_power ? "=" : "!=") + " m^(a+2)");
  } else if (sub == "yz") {
    if (z_list.empty() || f_text.empty())
      throw ParseError("yz needs --z <indices> and --f <polynomial>");
    std::vector<std::size_t> z;
    std::stringstream zs(z_list);
    std::string tok;
    while (std::getline(zs, tok, ',')) z.push_back(std::stoul(tok));
    Polynomial f = parse_polynomial(f_text, X.ring());
    auto v = verify_yz(X, z, f, rng);
    out.doc["applicable"] = v.applicable;
    out.doc["a_prime"] = v.a_prime;
    out.doc["e"] = v.e;
    out.doc["containments"] =
        Json{{"lower", v.lower_e}, {"middle", v.middle}, {"upper", v.upper}};
    out.plain(std::string("containments: ") +
              (v.pass() ? "all hold" : (v.applicable ? "FAILED" : "skipped")));
    if (v.applicable && !v.pass()) return kExitAssertionFailure;
  } else {
    throw ParseError("unknown points subcommand '" + sub + "'");
  }
  return kExitOk;
}

int cmd_verify(const std::string& file, const std::string& suite,
               std::uint64_t seed, int cutoff, int power,
               const std::vector<int>& grid_i, const std::vector<int>& grid_j,
               Output& out) {
  SuiteInput input;
  if (io::is_points_file(file)) {
    PointSet X = io::read_points_file(file);
    input.I = X.vanishing_ideal();
    input.points = std::move(X);
    input.is_reduced = true;
  } else {
    input.I = io::read_ring_file(file).ideal;
  }
  SuiteOptions options;
  options.seed = seed;
  if (cutoff > 0) options.cutoff = cutoff;
  options.power = power;
  options.grid_i = grid_i;
  options.grid_j = grid_j;
  auto rep = run_suite(suite, input, options);
  out.doc["command"] = "verify";
  out.doc["input"] = file;
  out.doc["seed"] = seed;
  out.doc["report"] = suite_to_json(rep);
  print_suite(out, rep);
  if (!rep.all_pass()) return kExitAssertionFailure;
  if (rep.inconclusive) return kExitInconclusive;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact core / canonical-module / Cayley-Bacharach calculator"};
  app.require_subcommand(1);

  std::string file, method = "both", format = "plain", suite, sub, z_list, f_text;
  int power = 1, cutoff = 0;
  std::vector<int> grid_i, grid_j;
  std::uint64_t seed = 0;
  bool seed_set = false, geom_reduced = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input file")->required();
    cmd->add_option("--seed", seed, "random seed (default: CORECALC_SEED or 0)")
        ->each([&](const std::string&) { seed_set = true; });
    cmd->add_option("--format", format, "plain|json")
        ->check(CLI::IsMember({"plain", "json"}));
  };

  auto* c_inv = app.add_subcommand("invariants", "invariant report of a ring file");
  add_common(c_inv);

  auto* c_core = app.add_subcommand("core", "core of a power of the maximal ideal");
  add_common(c_core);
  c_core->add_option("--power", power, "n in core(m^n)")->check(CLI::PositiveNumber);
  c_core->add_option("--method", method, "formula|oracle|both")
      ->check(CLI::IsMember({"formula", "oracle", "both"}));
  c_core->add_flag("--geometrically-reduced", geom_reduced,
                   "assert geometric reducedness in positive characteristic");

  auto* c_pts = app.add_subcommand("points", "point-set computations");
  c_pts->add_option("file", file, "points file")->required();
  c_pts->add_option("subcommand", sub, "hf|separators|conductor|core|cb|yz")
      ->required()
      ->check(CLI::IsMember({"hf", "separators", "conductor", "core", "cb", "yz"}));
  c_pts->add_option("--seed", seed, "random seed")
      ->each([&](const std::string&) { seed_set = true; });
  c_pts->add_option("--format", format, "plain|json")
      ->check(CLI::IsMember({"plain", "json"}));
  c_pts->add_option("--z", z_list, "comma-separated point indices forming Z");
  c_pts->add_option("--f", f_text, "hypersurface through Y");

  auto* c_ver = app.add_subcommand("verify", "run a named identity suite");
  add_common(c_ver);
  c_ver->add_option("--suite", suite, "suite name")->required();
  c_ver->add_option("--cutoff", cutoff, "degreewise cutoff override");
  c_ver->add_option("--power", power, "n for the core suites")
      ->check(CLI::PositiveNumber);
  c_ver->add_option("--i", grid_i, "replace the sampled i values");
  c_ver->add_option("--j", grid_j, "replace the sampled j values");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.json = format == "json";
  try {
    if (!seed_set) seed = default_seed();
    int code = kExitOk;
    if (c_inv->parsed()) code = cmd_invariants(file, seed, out);
    if (c_core->parsed())
      code = cmd_core(file, power, method, geom_reduced, seed, out);
    if (c_pts->parsed()) code = cmd_points(file, sub, z_list, f_text, seed, out);
    if (c_ver->parsed())
      code = cmd_verify(file, suite, seed, cutoff, power, grid_i, grid_j, out);
    out.finish();
    return code;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAssertionFailure;
  }
}
