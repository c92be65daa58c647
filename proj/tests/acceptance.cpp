// Acceptance suite: one test case per criterion, each printing a single
// PASS/FAIL line. All checks are exact; there are no tolerances anywhere.
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "corecalc/corecalc.hpp"

using namespace corecalc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(int criterion, bool pass, const std::string& what) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str());
  std::fflush(stdout);
}

RingPtr p2_ring(const Field& f) {
  return make_ring(f, {"x0", "x1", "x2"});
}

PointSet four_point_config(const Field& f) {
  auto r = p2_ring(f);
  auto mk = [&](long long a, long long b, long long c) {
    return std::vector<FieldScalar>{FieldScalar::from_int(f, a),
                                    FieldScalar::from_int(f, b),
                                    FieldScalar::from_int(f, c)};
  };
  return PointSet(r, {mk(0, -1, 1), mk(0, 0, 1), mk(0, 1, 1), mk(1, 0, 1)});
}

Ideal four_point_presentation(const RingPtr& r) {
  return Ideal(r, {parse_polynomial("x0*x1", r),
                   parse_polynomial("x0*(x0-x2)", r),
                   parse_polynomial("x1*(x1-x2)*(x1+x2)", r)});
}

// Points (a_i : b_j : 1) of a grid: a complete intersection of the two
// products of linear forms.
PointSet grid_points(const RingPtr& r, const std::vector<long long>& as,
                     const std::vector<long long>& bs) {
  const Field& f = r->field;
  std::vector<std::vector<FieldScalar>> pts;
  for (auto a : as)
    for (auto b : bs)
      pts.push_back({FieldScalar::from_int(f, a), FieldScalar::from_int(f, b),
                     FieldScalar::one(f)});
  return PointSet(r, pts);
}

// k points on the line x0 = 0 plus the rest generic.
PointSet collinear_subset_points(const RingPtr& r, std::size_t on_line,
                                 std::size_t off_line, Rng& rng) {
  const Field& f = r->field;
  std::vector<std::vector<FieldScalar>> pts;
  for (std::size_t i = 0; i < on_line; ++i)
    pts.push_back({FieldScalar::zero(f),
                   FieldScalar::from_int(f, static_cast<long long>(i) + 1),
                   FieldScalar::one(f)});
  while (pts.size() < on_line + off_line) {
    std::vector<FieldScalar> pt = {
        FieldScalar::from_int(f, 1 + static_cast<long long>(rng.uniform(32000))),
        random_scalar(f, rng), FieldScalar::one(f)};
    bool dup = false;
    for (const auto& q : pts) dup = dup || q == pt;
    if (!dup) pts.push_back(std::move(pt));
  }
  return PointSet(r, pts);
}

struct CorpusEntry {
  std::string name;
  SuiteInput input;
  bool is_ci = false;  // complete intersection (level) members
};

// The CM example corpus for the identity criteria: points in P^2, cones in
// one extra variable (d = 2), hypersurfaces, and complete intersections.
std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  Field fp = Field::prime_default();
  auto r = p2_ring(fp);

  auto add_points = [&](const std::string& name, PointSet X) {
    CorpusEntry e;
    e.name = name;
    e.input.I = X.vanishing_ideal();
    e.input.points = std::move(X);
    e.input.is_reduced = true;
    out.push_back(std::move(e));
  };

  add_points("four-point configuration", four_point_config(fp));
  Rng sampler(811);
  add_points("random 5 points", random_points(r, 5, sampler));
  add_points("random 6 points", random_points(r, 6, sampler));
  add_points("random 7 points", random_points(r, 7, sampler));
  add_points("grid 2x3 complete intersection points", grid_points(r, {0, 1}, {0, 1, 2}));

  // cones over point sets: d = 2, still CM and reduced
  for (const std::string base : {"fourpoint", "random4"}) {
    auto rc = make_ring(fp, {"x0", "x1", "x2", "w"});
    std::vector<Polynomial> gens;
    if (base == "fourpoint") {
      gens = {parse_polynomial("x0*x1", rc), parse_polynomial("x0*(x0-x2)", rc),
              parse_polynomial("x1*(x1-x2)*(x1+x2)", rc)};
    } else {
      auto X = random_points(r, 4, sampler);
      for (const auto& g : X.vanishing_ideal().groebner())
        gens.push_back(parse_polynomial(g.str(), rc));
    }
    CorpusEntry e;
    e.name = "cone over " + base + " points";
    e.input.I = Ideal(rc, gens);
    e.input.is_reduced = true;
    out.push_back(std::move(e));
  }

  // hypersurfaces: a product of distinct linear forms (reduced) and a cubic
  {
    auto r2 = make_ring(fp, {"x", "y"});
    CorpusEntry e;
    e.name = "three reduced points in P^1 (split cubic)";
    e.input.I = Ideal(r2, {parse_polynomial("x*y*(x-y)", r2)});
    e.input.is_reduced = true;
    out.push_back(std::move(e));

    CorpusEntry e2;
    e2.name = "plane quartic hypersurface";
    e2.input.I = Ideal(r2, {parse_polynomial("x^4+x*y^3+y^4", r2)});
    out.push_back(std::move(e2));
  }

  // complete intersections (Gorenstein, hence level)
  {
    auto r3 = make_ring(fp, {"x", "y", "z"});
    CorpusEntry e;
    e.name = "complete intersection (2,2) in three variables";
    e.input.I = Ideal(r3, {parse_polynomial("x^2-y*z", r3),
                           parse_polynomial("y^2-x*z", r3)});
    e.is_ci = true;
    out.push_back(std::move(e));

    CorpusEntry e2;
    e2.name = "complete intersection (2,3) in three variables";
    e2.input.I = Ideal(r3, {parse_polynomial("x^2+y*z", r3),
                            parse_polynomial("y^3+z^3+x^2*z", r3)});
    e2.is_ci = true;
    out.push_back(std::move(e2));
  }
  return out;
}

bool suite_green(const std::string& suite, const SuiteInput& input,
                 std::uint64_t seed, std::string* why = nullptr) {
  SuiteOptions opt;
  opt.seed = seed;
  auto rep = run_suite(suite, input, opt);
  if (!rep.all_pass() || rep.inconclusive) {
    if (why) {
      for (const auto& c : rep.checks)
        if (c.status == Check::Status::fail)
          *why += rep.suite + ": " + c.name + "; ";
      if (rep.inconclusive) *why += rep.suite + ": inconclusive; ";
    }
    return false;
  }
  return true;
}

}  // namespace

TEST_CASE("criterion 1: four-point golden test over F_32003 and Q") {
  bool pass = true;
  std::string detail;
  for (Field f : {Field::prime_default(), Field::rationals()}) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = p2_ring(f);
    PointSet X = four_point_config(f);
    Ideal I = X.vanishing_ideal();
    Rng rng(1);

    if (!I.equals(four_point_presentation(r))) pass = false;
    auto series = hilbert_series(I);
    if (series.a_invariant_cm() != 1) pass = false;

    // core(m) = m^3 + (x0^2), exact reduced-basis equality
    auto core = core_formula(I, 1, rng);
    Ideal expected = ideal_sum(
        ideal_sum(ideal_power(Ideal::maximal(r), 3),
                  Ideal(r, {parse_polynomial("x0^2", r)})),
        I);
    if (!core.core.equals(expected)) pass = false;

    // conductor = the R-ideal generated by the four known separators
    Ideal C = conductor(X, rng);
    std::vector<Polynomial> known_seps = I.generators();
    for (const char* s :
         {"x1*(x1-x2)", "(x0-x1-x2)*(x1-x2)", "x1*(x1+x2)", "x0"})
      known_seps.push_back(parse_polynomial(s, r));
    if (!C.equals(Ideal(r, known_seps))) pass = false;

    if (cayley_bacharach(X, rng).is_cb) pass = false;

    double dt = seconds_since(t0);
    detail += f.description() + " " + std::to_string(dt) + "s ";
    if (dt >= 1.0) pass = false;
  }
  report(1, pass, "four-point example: a=1, core(m)=m^3+(x0^2), conductor, CB=false, <1s per field (" + detail + ")");
  CHECK(pass);
}

TEST_CASE("criterion 2: formula vs oracle on 25 random point sets, n in {1,2}") {
  auto t0 = std::chrono::steady_clock::now();
  auto r = p2_ring(Field::prime_default());
  bool pass = true;
  Rng master(20250808);
  for (int trial = 0; trial < 25 && pass; ++trial) {
    Rng sampler = master.derive(static_cast<std::uint64_t>(trial));
    std::size_t count = 4 + sampler.uniform(5);  // 4..8 points
    PointSet X = random_points(r, count, sampler);
    Ideal I = X.vanishing_ideal();
    for (int n : {1, 2}) {
      Rng rng = sampler.derive(static_cast<std::uint64_t>(100 + n));
      CoreResult both = core_both(I, n, rng);
      if (both.inconclusive || !both.agreement.value_or(false)) pass = false;
    }
  }
  double dt = seconds_since(t0);
  if (dt >= 120.0) pass = false;
  report(2, pass, "25 point sets, n in {1,2}, 100% formula/oracle agreement in " +
                      std::to_string(dt) + "s (<120s)");
  CHECK(pass);
}

TEST_CASE("criterion 3: Cayley-Bacharach triple equivalence on 35 configurations") {
  auto r = p2_ring(Field::prime_default());
  bool pass = true;
  int agree = 0, total = 0;
  Rng master(30303);
  auto check_one = [&](PointSet X) {
    ++total;
    Rng rng = master.derive(static_cast<std::uint64_t>(1000 + total));
    try {
      cayley_bacharach(X, rng);  // throws if the three verdicts disagree
      ++agree;
    } catch (const InternalError&) {
      pass = false;
    }
  };
  for (int trial = 0; trial < 25; ++trial) {
    Rng sampler = master.derive(static_cast<std::uint64_t>(trial));
    check_one(random_points(r, 4 + sampler.uniform(5), sampler));
  }
  // structured: collinear subsets and complete intersections
  for (int k = 0; k < 5; ++k) {
    Rng sampler = master.derive(static_cast<std::uint64_t>(500 + k));
    check_one(collinear_subset_points(r, 3 + k % 2, 1 + k % 3, sampler));
  }
  check_one(grid_points(r, {0, 1}, {0, 1}));
  check_one(grid_points(r, {0, 1}, {0, 1, 2}));
  check_one(grid_points(r, {0, 1, 2}, {0, 1, 2}));
  check_one(grid_points(r, {0, 1, 5}, {0, 3}));
  check_one(grid_points(r, {1, 2}, {4, 5, 6}));
  report(3, pass, "three-way CB agreement on " + std::to_string(agree) + "/" +
                      std::to_string(total) + " configurations");
  CHECK(pass);
  CHECK(total == 35);
}

TEST_CASE("criterion 4: section-2 identity suites across the CM corpus") {
  bool pass = true;
  std::string why;
  int examples = 0;
  for (const auto& entry : corpus()) {
    ++examples;
    for (const std::string suite :
         {"puv22", "colon1", "thm-omega", "ann-omega", "ann-omega-dim1",
          "omegacontainment", "colon-structure"}) {
      if (!suite_green(suite, entry.input, 40 + examples, &why)) {
        pass = false;
        why += " @ " + entry.name + "; ";
      }
    }
  }
  if (examples < 10) pass = false;
  report(4, pass, "identity suites 100% green on " + std::to_string(examples) +
                      " CM examples" + (why.empty() ? "" : " -- " + why));
  CHECK(pass);
}

TEST_CASE("criterion 5: level collapse on every complete intersection") {
  bool pass = true;
  int checked = 0;
  for (const auto& entry : corpus()) {
    if (!entry.is_ci) continue;
    ++checked;
    Rng rng(50);
    GradedContext ctx = make_context(entry.input.I, rng, entry.input.is_reduced);
    if (!ctx.inv.is_level) pass = false;
    SuiteOptions grid_opt;
    for (auto [i, j] : corecalc::detail::sample_grid(ctx, grid_opt)) {
      Ideal lhs = ctx.colon_ideal(i, j);
      Ideal rhs = ideal_sum(
          ideal_power(ctx.maximal(), i - j + ctx.a() + ctx.d()), ctx.I);
      if (!lhs.equals(rhs)) pass = false;
    }
  }
  report(5, pass, "J^i : m^j = m^(i-j+a+d) on the full grid for " +
                      std::to_string(checked) + " complete intersections");
  CHECK(pass);
  CHECK(checked >= 2);
}

TEST_CASE("criterion 6: section-3 degree bounds") {
  bool pass = true;
  int lower_checked = 0, applicable_pass = 0, applicable_total = 0, skipped = 0;
  std::string why;
  Rng master(606);
  for (const auto& entry : corpus()) {
    Rng rng = master.derive(static_cast<std::uint64_t>(lower_checked + 1));
    GradedContext ctx = make_context(entry.input.I, rng, entry.input.is_reduced);
    std::vector<std::pair<std::string, Ideal>> hs;
    hs.emplace_back("m^2", ideal_power(ctx.maximal(), 2));
    hs.emplace_back("m^3", ideal_power(ctx.maximal(), 3));
    Rng hr = rng.derive(77);
    hs.emplace_back("random form",
                    Ideal(ctx.I.ring(),
                          {random_form(ctx.I.ring(), 1 + static_cast<int>(hr.uniform(2)), hr)}));
    if (entry.input.points && entry.input.points->size() >= 2)
      hs.emplace_back("subset", entry.input.points->without(0).vanishing_ideal());
    lower_checked += static_cast<int>(hs.size());
    for (const auto& c : verify_degree_bounds(ctx, hs)) {
      if (!c.applicable) {
        ++skipped;
        continue;
      }
      ++applicable_total;
      if (c.pass)
        ++applicable_pass;
      else {
        pass = false;
        why += c.name + " @ " + entry.name + "; ";
      }
    }
    // dimension-one point sets: indeg(0:H) <= a+1 for subset ideals
    if (entry.input.points && ctx.d() == 1) {
      const PointSet& X = *entry.input.points;
      for (std::size_t i = 0; i < std::min<std::size_t>(X.size(), 2); ++i) {
        Ideal H = ideal_sum(X.without(i).vanishing_ideal(), ctx.I);
        Ideal ann = ideal_quotient(ctx.I, H);
        if (ann.equals(ctx.I)) {
          ++skipped;
          continue;
        }
        ++applicable_total;
        auto indeg = corecalc::detail::r_indeg(ann, ctx.I);
        if (indeg && *indeg <= ctx.a() + 1)
          ++applicable_pass;
        else {
          pass = false;
          why += "dim-1 subset bound @ " + entry.name + "; ";
        }
      }
    }
  }
  if (lower_checked < 20) pass = false;
  report(6, pass, std::to_string(applicable_pass) + "/" +
                      std::to_string(applicable_total) +
                      " applicable bounds hold, " + std::to_string(skipped) +
                      " skipped with reason, " + std::to_string(lower_checked) +
                      " (R,H) pairs sampled" + (why.empty() ? "" : " -- " + why));
  CHECK(pass);
}

TEST_CASE("criterion 7: core structure, core-ann agreement, local containment") {
  bool pass = true;
  std::string why;
  for (const auto& entry : corpus()) {
    Rng rng(707);
    GradedContext ctx = make_context(entry.input.I, rng, entry.input.is_reduced);
    auto v = verify_core_structure(ctx, 1, rng);
    if (!v.sandwich || !v.reconstruction || !v.three_way_agreement ||
        !v.n1_equivalence.value_or(true)) {
      pass = false;
      why += "core structure @ " + entry.name + "; ";
    }
  }

  // ten split instances, the four-point collinear split first
  int splits_checked = 0;
  {
    Field fp = Field::prime_default();
    auto r = p2_ring(fp);
    PointSet X = four_point_config(fp);
    Rng rng(708);
    Ideal L(r, {parse_polynomial("x0", r)});
    Ideal H = X.subset({3}).vanishing_ideal();
    auto v = verify_local_containment(X.vanishing_ideal(), L, H,
                                      Ideal::maximal(r), rng, 1);
    ++splits_checked;
    if (!v.applicable || !v.pass || v.e != 1) {
      pass = false;
      why += "four-point split; ";
    }
  }
  {
    auto r = p2_ring(Field::prime_default());
    Rng master(709);
    while (splits_checked < 10) {
      Rng sampler = master.derive(static_cast<std::uint64_t>(splits_checked));
      PointSet X = random_points(r, 4 + sampler.uniform(4), sampler);
      SuiteInput input;
      input.I = X.vanishing_ideal();
      input.points = X;
      input.is_reduced = true;
      SuiteOptions opt;
      opt.seed = 710 + static_cast<std::uint64_t>(splits_checked);
      auto rep = run_suite("local", input, opt);
      int passes = 0;
      for (const auto& c : rep.checks) {
        if (c.status == Check::Status::fail) {
          pass = false;
          why += "local @ random split; ";
        }
        if (c.status == Check::Status::pass) ++passes;
      }
      if (passes == 0) {
        pass = false;
        why += "no applicable local split; ";
      }
      splits_checked += passes;
    }
  }
  report(7, pass, "coreandK + core-ann on all corpus examples, local containment on " +
                      std::to_string(splits_checked) + " split instances" +
                      (why.empty() ? "" : " -- " + why));
  CHECK(pass);
}

TEST_CASE("criterion 8: determinism and cross-field consistency") {
  bool pass = true;

  // byte-identical JSON for the same seed, across suite reruns
  {
    Field fp = Field::prime_default();
    PointSet X = four_point_config(fp);
    SuiteInput input;
    input.I = X.vanishing_ideal();
    input.points = X;
    input.is_reduced = true;
    for (const std::string suite : {"colon-structure", "core-vs-oracle", "bounds"}) {
      SuiteOptions opt;
      opt.seed = 888;
      auto a = suite_to_json(run_suite(suite, input, opt)).dump();
      auto b = suite_to_json(run_suite(suite, input, opt)).dump();
      if (a != b) pass = false;
    }
  }

  // the worked example gives the same verdicts over Q and over F_32003
  std::vector<std::string> verdicts;
  for (Field f : {Field::prime_default(), Field::rationals()}) {
    auto r = p2_ring(f);
    PointSet X = four_point_config(f);
    Rng rng(881);
    auto inv = invariants(X.vanishing_ideal(), rng);
    auto cb = cayley_bacharach(X, rng);
    Ideal expected_core = ideal_sum(
        ideal_sum(ideal_power(Ideal::maximal(r), 3),
                  Ideal(r, {parse_polynomial("x0^2", r)})),
        X.vanishing_ideal());
    std::string v = "a=" + std::to_string(inv.a) + " b=" + std::to_string(inv.b) +
                    " c=" + std::to_string(inv.c) +
                    " type=" + std::to_string(inv.type) +
                    " cb=" + (cb.is_cb ? "1" : "0") +
                    " core_match=" + (cb.core.equals(expected_core) ? "1" : "0");
    verdicts.push_back(v);
  }
  if (verdicts[0] != verdicts[1]) pass = false;
  report(8, pass, "byte-identical reruns; Q and F_32003 verdicts agree (" +
                      verdicts[0] + ")");
  CHECK(pass);
}
