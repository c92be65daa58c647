#ifndef CORECALC_VERIFY_HPP
#define CORECALC_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "corecalc/points.hpp"

namespace corecalc {

struct Check {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::fail;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool inconclusive = false;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == Check::Status::fail) return false;
    return true;
  }
};

struct SuiteInput {
  Ideal I;
  std::optional<PointSet> points;
  bool is_reduced = false;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::optional<int> cutoff;     // overrides 2(a+d)+4
  int power = 1;                 // n for the core suites
  std::vector<int> grid_i;       // replaces the default i samples when set
  std::vector<int> grid_j;       // replaces the default j samples when set
};

namespace detail {

inline void add(SuiteReport& rep, const std::string& name, bool pass,
                const std::string& note = "") {
  rep.checks.push_back({name, pass ? Check::Status::pass : Check::Status::fail, note});
}

inline void skip(SuiteReport& rep, const std::string& name, const std::string& why) {
  rep.checks.push_back({name, Check::Status::skip, why});
}

// Default (i, j) sample grid: j in {a+d, a+d+1}, i in {j, j+1, j+2, nd+a+1};
// both axes replaceable through the options.
inline std::vector<std::pair<int, int>> sample_grid(const GradedContext& ctx,
                                                    const SuiteOptions& options) {
  int base = ctx.a() + ctx.d();
  std::vector<int> js = options.grid_j;
  if (js.empty()) js = {base, base + 1};
  std::vector<std::pair<int, int>> grid;
  for (int j : js) {
    if (j < base)
      throw PreconditionError("sample grid requires j >= a+d");
    std::vector<int> is = options.grid_i;
    if (is.empty()) is = {j, j + 1, j + 2, options.power * ctx.d() + ctx.a() + 1};
    for (int i : is) {
      std::pair<int, int> entry{i, j};
      bool dup = false;
      for (const auto& g : grid) dup = dup || g == entry;
      if (!dup) grid.push_back(entry);
    }
  }
  return grid;
}

inline std::string ij(int i, int j) {
  return "(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
}

// Splits of a point set suitable for the Y/Z and local suites: Z ranges
// over single points and pairs, f is a hypersurface through Y taken from
// the lowest degree of I_Y not vanishing on all of X.
struct Split {
  std::vector<std::size_t> z_indices;
  Polynomial f;
};

inline std::vector<Split> point_splits(const PointSet& X, std::size_t max_splits) {
  std::vector<Split> splits;
  const Ideal& IX = X.vanishing_ideal();
  auto try_split = [&](std::vector<std::size_t> z) {
    if (splits.size() >= max_splits) return;
    std::vector<std::size_t> y;
    std::vector<bool> in_z(X.size(), false);
    for (auto i : z) in_z[i] = true;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!in_z[i]) y.push_back(i);
    if (y.empty()) return;
    Ideal IY = X.subset(y).vanishing_ideal();
    for (const auto& g : IY.groebner()) {
      if (!IX.contains(g)) {
        splits.push_back({std::move(z), g});
        return;
      }
    }
  };
  for (std::size_t i = 0; i < X.size() && splits.size() < max_splits; ++i)
    try_split({i});
  for (std::size_t i = 0; i + 1 < X.size() && splits.size() < max_splits; ++i)
    try_split({i, i + 1});
  return splits;
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& suite, const SuiteInput& input,
                             const SuiteOptions& options) {
  SuiteReport rep;
  rep.suite = suite;
  Rng rng(options.seed);

  const bool needs_points =
      suite == "coreandS" || suite == "points-cb" || suite == "yz" || suite == "local";
  if (needs_points && !input.points)
    throw PreconditionError("suite '" + suite + "' needs a points file");

  if (suite == "points-cb") {
    const PointSet& X = *input.points;
    try {
      auto cb = cayley_bacharach(X, rng);
      detail::add(rep, "definition-CB = equal-separator-degrees = (core = m^(a+2))",
                  true, cb.is_cb ? "CB" : "not CB");
    } catch (const InternalError& e) {
      detail::add(rep, "Cayley-Bacharach triple agreement", false, e.what());
    }
    return rep;
  }

  GradedContext ctx = make_context(input.I, rng, input.is_reduced);
  if (options.cutoff) ctx.cutoff = *options.cutoff;
  int a = ctx.a(), d = ctx.d();

  if (suite == "puv22") {
    for (auto [i, j] : detail::sample_grid(ctx, options)) {
      int s = j + (i - 1) * (d - 1);
      bool ok = ctx.colon_ideal(i, j).equals(ctx.colon_bracket(i, s));
      detail::add(rep, "J^i : m^j = J^[i] : m^(j+(i-1)(d-1)) " + detail::ij(i, j), ok);
    }
  } else if (suite == "colon1") {
    for (auto [i, j] : detail::sample_grid(ctx, options)) {
      bool ok = ctx.colon_ideal(i, j).equals(ctx.colon_ideal(i - j + a + d, a + d));
      detail::add(rep, "J^i : m^j = J^(i-j+a+d) : m^(a+d) " + detail::ij(i, j), ok);
    }
  } else if (suite == "thm-omega") {
    for (auto [i, j] : detail::sample_grid(ctx, options)) {
      auto v = verify_theorem_omega(ctx, i, j);
      detail::add(rep, "colon in omega is the truncation " + detail::ij(i, j),
                  v.colon_is_truncation);
      detail::add(rep, "bracket-power colon matches " + detail::ij(i, j),
                  v.bracket_matches);
      if (i >= j)
        detail::add(rep, "J^i w : m^j = J^(i-j)(J^j w : m^j) " + detail::ij(i, j),
                    v.degree_shift);
    }
  } else if (suite == "ann-omega") {
    for (int t = -a - 1; t <= std::min(d, -a + 3); ++t) {
      for (int j : {a + d, a + d + 1}) {
        auto v = verify_ann_formula(ctx, t, j, ctx.cutoff);
        std::string tag = " (t=" + std::to_string(t) + ",j=" + std::to_string(j) + ")";
        detail::add(rep, "ann([w]_t R) = sum of colon pieces" + tag, v.degreewise);
        detail::add(rep, "ann([w]_{<=t} R) = ann([w]_t R)" + tag, v.le_t_equality);
      }
    }
  } else if (suite == "ann-omega-dim1") {
    if (d != 1) {
      detail::skip(rep, "dimension-one annihilator structure", "d != 1");
      return rep;
    }
    for (int t = -a - 1; t <= std::min(d, -a + 3); ++t) {
      for (int j : {a + 1, a + 2}) {
        auto v = verify_ann_formula(ctx, t, j, ctx.cutoff);
        std::string tag = " (t=" + std::to_string(t) + ",j=" + std::to_string(j) + ")";
        detail::add(rep, "k[y]-structure of the annihilator" + tag,
                    v.dim1_applicable && v.dim1_structure);
      }
    }
  } else if (suite == "omegacontainment") {
    for (auto [i, j] : detail::sample_grid(ctx, options)) {
      auto v = verify_omegacontainment(ctx, i, j);
      detail::add(rep, "module equality iff double annihilator " + detail::ij(i, j),
                  v.agree(),
                  std::string(v.module_equality ? "both hold" : "both fail"));
    }
  } else if (suite == "colon-structure") {
    for (auto [i, j] : detail::sample_grid(ctx, options)) {
      auto v = verify_colon_structure(ctx, i, j);
      detail::add(rep, "m^(i-j+a+d) <= J^i : m^j " + detail::ij(i, j), v.sandwich_lower);
      detail::add(rep, "J^i : m^j <= m^(i-j+b+d) " + detail::ij(i, j), v.sandwich_upper);
      detail::add(rep, "reconstruction from annihilator pieces " + detail::ij(i, j),
                  v.reconstruction);
      if (v.height_zero)
        detail::add(rep, "correction ideal N has height zero " + detail::ij(i, j),
                    *v.height_zero);
      if (v.one_degree_rule)
        detail::add(rep, "one-degree colon collapses to m-power " + detail::ij(i, j),
                    *v.one_degree_rule);
      if (v.level_rule)
        detail::add(rep, "level ring: J^i : m^j = m^(i-j+a+d) " + detail::ij(i, j),
                    *v.level_rule);
    }
  } else if (suite == "core-vs-oracle") {
    for (int n : {1, options.power > 1 ? options.power : 2}) {
      CoreResult both = core_both(ctx.I, n, rng);
      if (both.inconclusive) {
        rep.inconclusive = true;
        detail::skip(rep, "core formula = core oracle (n=" + std::to_string(n) + ")",
                     "oracle did not stabilize");
      } else {
        detail::add(rep, "core formula = core oracle (n=" + std::to_string(n) + ")",
                    both.agreement.value_or(false));
      }
    }
  } else if (suite == "core-ann") {
    auto v = verify_core_structure(ctx, options.power, rng);
    detail::add(rep, "m^(nd+a+1) <= core(m^n) <= m^(nd+b+1)", v.sandwich);
    detail::add(rep, "core(m^n) = m^(nd+a+1) + N from annihilator pieces",
                v.reconstruction);
    detail::add(rep, "faithful iff expected power iff one-degree",
                v.three_way_agreement,
                v.faithful ? "[w]_{-a}R faithful" : "[w]_{-a}R not faithful");
  } else if (suite == "indeg-a-d") {
    auto v = verify_core_structure(ctx, 1, rng);
    if (!v.n1_equivalence)
      detail::skip(rep, "n = 1 equivalence",
                   "needs d = 1 or the omega-truncation condition");
    else
      detail::add(rep, "faithful iff core(m) = m^(a+d+1) iff one degree",
                  *v.n1_equivalence);
  } else if (suite == "coreandS") {
    if (d != 1) {
      detail::skip(rep, "conductor description of colon ideals", "d != 1");
      return rep;
    }
    Ideal C = conductor(*input.points, rng);
    for (int j : {a + 1, a + 2}) {
      for (int i : {j, j + 1, j + 2}) {
        Ideal lhs = ctx.colon_ideal(i, j);
        Ideal rhs = ideal_sum(
            ideal_product(ideal_power(ctx.maximal(), i - j), C), ctx.I);
        detail::add(rep, "J^i : m^j = m^(i-j) C " + detail::ij(i, j),
                    lhs.equals(rhs));
      }
    }
  } else if (suite == "yz") {
    auto splits = detail::point_splits(*input.points, 3);
    if (splits.empty()) detail::skip(rep, "Y/Z containments", "no usable split");
    for (const auto& split : splits) {
      auto v = verify_yz(*input.points, split.z_indices, split.f, rng);
      std::string tag = " (|Z|=" + std::to_string(split.z_indices.size()) + ")";
      if (!v.applicable) {
        detail::skip(rep, "Y/Z containments" + tag, v.note);
        continue;
      }
      detail::add(rep, "m^(a+2) + f m^e <= m^(a+2) + f m^(a'+2)" + tag, v.lower_e);
      detail::add(rep, "m^(a+2) + f m^(a'+2) <= core X" + tag, v.middle);
      detail::add(rep, "core X <= m^(b+2)" + tag, v.upper);
    }
  } else if (suite == "local") {
    auto splits = detail::point_splits(*input.points, 3);
    if (splits.empty()) detail::skip(rep, "local containment", "no usable split");
    for (const auto& split : splits) {
      Ideal L(ctx.I.ring(), {split.f});
      Ideal H = input.points->subset(split.z_indices).vanishing_ideal();
      for (int n : {1, options.power > 1 ? options.power : 2}) {
        auto v = verify_local_containment(ctx.I, L, H,
                                          ideal_power(ctx.maximal(), n), rng, n);
        std::string tag = " (|Z|=" + std::to_string(split.z_indices.size()) +
                          ",n=" + std::to_string(n) + ")";
        if (!v.applicable)
          detail::skip(rep, "L Q^e <= core Q" + tag, v.note);
        else
          detail::add(rep, "L Q^e <= core Q" + tag, v.pass, v.note);
      }
    }
    // one general m-primary instance through the oracle
    if (!splits.empty()) {
      Ideal L(ctx.I.ring(), {splits[0].f});
      Ideal H = input.points->subset(splits[0].z_indices).vanishing_ideal();
      Ideal Q = ideal_power(ctx.maximal(), 2);
      auto v = verify_local_containment(ctx.I, L, H, Q, rng);
      if (v.inconclusive) {
        rep.inconclusive = true;
        detail::skip(rep, "L Q^e <= core Q (oracle core, Q = m^2)", v.note);
      } else if (!v.applicable) {
        detail::skip(rep, "L Q^e <= core Q (oracle core, Q = m^2)", v.note);
      } else {
        detail::add(rep, "L Q^e <= core Q (oracle core, Q = m^2)", v.pass, v.note);
      }
    }
  } else if (suite == "bounds") {
    std::vector<std::pair<std::string, Ideal>> hs;
    hs.emplace_back("m^2", ideal_power(ctx.maximal(), 2));
    hs.emplace_back("m^3", ideal_power(ctx.maximal(), 3));
    for (int k = 0; k < 3; ++k) {
      Rng hr = rng.derive(300 + static_cast<std::uint64_t>(k));
      int deg = 1 + static_cast<int>(hr.uniform(2));
      hs.emplace_back("random form deg " + std::to_string(deg),
                      Ideal(ctx.I.ring(), {random_form(ctx.I.ring(), deg, hr)}));
    }
    if (input.points && input.points->size() >= 2) {
      const PointSet& X = *input.points;
      hs.emplace_back("subset ideal", X.without(0).vanishing_ideal());
    }
    for (const auto& c : verify_degree_bounds(ctx, hs)) {
      if (!c.applicable)
        detail::skip(rep, c.name, c.note);
      else
        detail::add(rep, c.name, c.pass, c.note);
    }
    // dimension-one point sets: indeg(0 : H) <= a + 1 for subset ideals
    if (input.points && d == 1) {
      const PointSet& X = *input.points;
      for (std::size_t i = 0; i < std::min<std::size_t>(X.size(), 3); ++i) {
        Ideal H = ideal_sum(X.without(i).vanishing_ideal(), ctx.I);
        Ideal ann = ideal_quotient(ctx.I, H);
        std::string name =
            "indeg(0:H) <= a+1 for the subset missing point " + std::to_string(i);
        if (ann.equals(ctx.I)) {
          detail::skip(rep, name, "0:H = 0");
          continue;
        }
        auto indeg = detail::r_indeg(ann, ctx.I);
        detail::add(rep, name, indeg && *indeg <= a + 1,
                    "indeg=" + std::to_string(indeg.value_or(-1)));
      }
    }
  } else {
    throw PreconditionError("unknown suite '" + suite + "'");
  }
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "puv22", "colon1", "thm-omega", "ann-omega", "ann-omega-dim1",
      "omegacontainment", "colon-structure", "core-vs-oracle", "core-ann",
      "indeg-a-d", "coreandS", "points-cb", "yz", "local", "bounds"};
  return names;
}

}  // namespace corecalc

#endif  // CORECALC_VERIFY_HPP
