#ifndef CORECALC_VERIFIERS_HPP
#define CORECALC_VERIFIERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corecalc/canonical.hpp"

namespace corecalc {

// Everything the identity verifiers consume about one standard graded
// Cohen-Macaulay quotient R = S/I: series, invariants, the canonical
// module presentation, and a fixed linear system of parameters J.
struct GradedContext {
  Ideal I;
  HilbertSeries series;
  InvariantReport inv;
  CanonicalRep W;
  std::vector<Polynomial> sop;  // lifts of y_1, ..., y_d
  Ideal J;                      // the S-ideal they generate
  bool is_reduced = false;      // set by constructions that guarantee it
  int cutoff = 0;               // default degree cutoff for degreewise checks

  int a() const { return inv.a; }
  int b() const { return inv.b; }
  int d() const { return inv.dimension; }

  Ideal maximal() const { return Ideal::maximal(I.ring()); }

  // (J^e + I) : m^j at the S level, i.e. the colon ideal taken in R.
  Ideal colon_ideal(int e, int j) const {
    Ideal top = e <= 0 ? Ideal::unit(I.ring())
                       : ideal_sum(ideal_power(J, e), I);
    if (j <= 0) return top;
    return ideal_quotient(top, ideal_power(maximal(), j));
  }

  // (J^[e] + I) : m^j with the bracket power of the fixed sop generators.
  Ideal colon_bracket(int e, int j) const {
    Ideal top = e <= 0 ? Ideal::unit(I.ring())
                       : ideal_sum(bracket_power(I.ring(), sop, e), I);
    if (j <= 0) return top;
    return ideal_quotient(top, ideal_power(maximal(), j));
  }
};

inline GradedContext make_context(const Ideal& I, Rng& rng,
                                  bool is_reduced = false) {
  GradedContext ctx;
  ctx.I = I;
  ctx.series = hilbert_series(I);
  ctx.inv = invariants(I, rng);
  if (!ctx.inv.is_cm)
    throw PreconditionError("identity suites require a Cohen-Macaulay quotient");
  ctx.W = canonical_rep(I, rng);
  ctx.sop = generic_linear_sop(I, rng);
  ctx.J = Ideal(I.ring(), ctx.sop);
  ctx.is_reduced = is_reduced;
  ctx.cutoff = 2 * (ctx.inv.a + ctx.inv.dimension) + 4;
  return ctx;
}

namespace detail {

// dim of { w in [omega]_delta : m^j * w lies in the submodule whose
// S-preimage is B } -- solved as a linear system over the component basis.
inline long long colon_piece_dim(const GradedContext& ctx, const Ideal& B,
                                 int delta, int j) {
  auto basis = omega_component_basis(ctx.W, delta);
  if (basis.empty()) return 0;
  const auto& gb = B.groebner();
  std::vector<std::vector<FieldScalar>> rows;  // constraints, per column l
  std::size_t r = basis.size();
  const Field& field = ctx.I.ring()->field;
  int sdeg = delta + ctx.W.shift + j;
  auto monos = monomials_of_degree(ctx.I.ring(), sdeg);
  for (const auto& u : monomials_of_degree(ctx.I.ring(), j)) {
    std::vector<std::vector<FieldScalar>> images;
    bool any = false;
    for (const auto& w : basis) {
      Polynomial uw = normal_form(w.times_term(FieldScalar::one(field), u), gb);
      images.push_back(coordinates(uw, monos));
      if (!uw.is_zero()) any = true;
    }
    if (!any) continue;
    for (std::size_t row = 0; row < monos.size(); ++row) {
      std::vector<FieldScalar> constraint(r, FieldScalar::zero(field));
      bool nonzero = false;
      for (std::size_t l = 0; l < r; ++l) {
        constraint[l] = images[l][row];
        if (!constraint[l].is_zero()) nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(constraint));
    }
  }
  Matrix m(0, r, field);
  for (auto& row : rows) m.append_row(std::move(row));
  return static_cast<long long>(r - m.rank());
}

}  // namespace detail

struct ThmOmegaVerdict {
  bool colon_is_truncation = false;   // J^i w :_w m^j = [w]_{>= i-j+d}
  bool bracket_matches = false;       // J^[i] w :_w m^s gives the same piece
  bool degree_shift = false;          // [w]_{l+1} = J [w]_l for l >= d
  bool pass() const { return colon_is_truncation && bracket_matches && degree_shift; }
};

// For j >= a+d the colon J^i w :_w m^j should be the truncation of w at
// degree i-j+d, and J should advance truncation degrees one at a time
// above d; checked degreewise against the component dimensions.
inline ThmOmegaVerdict verify_theorem_omega(const GradedContext& ctx, int i, int j) {
  if (j < ctx.a() + ctx.d())
    throw PreconditionError("requires j >= a+d");
  ThmOmegaVerdict v;
  int d = ctx.d();
  int s = j + (i - 1) * (d - 1);
  Ideal Ji_omega = i <= 0 ? ideal_sum(ctx.W.link, ctx.W.beta)
                          : ideal_sum(ideal_product(ideal_power(ctx.J, i), ctx.W.link),
                                      ctx.W.beta);
  Ideal Jbr_omega =
      i <= 0 ? ideal_sum(ctx.W.link, ctx.W.beta)
             : ideal_sum(ideal_product(bracket_power(ctx.I.ring(), ctx.sop, i),
                                       ctx.W.link),
                         ctx.W.beta);
  v.colon_is_truncation = true;
  v.bracket_matches = true;
  int hi = std::max(ctx.cutoff, i - j + d + 2);
  for (int delta = -ctx.a(); delta <= hi; ++delta) {
    long long expected = delta >= i - j + d ? omega_dim(ctx.W, delta) : 0;
    if (detail::colon_piece_dim(ctx, Ji_omega, delta, j) != expected)
      v.colon_is_truncation = false;
    if (detail::colon_piece_dim(ctx, Jbr_omega, delta, s) != expected)
      v.bracket_matches = false;
  }
  v.degree_shift = true;
  Ideal J_omega = ideal_sum(ideal_product(ctx.J, ctx.W.link), ctx.W.beta);
  for (int l = d; l <= std::max(ctx.cutoff, d + 3); ++l) {
    long long lhs = omega_dim(ctx.W, l + 1);
    long long rhs = hilbert_function(ctx.W.beta, l + 1 + ctx.W.shift) -
                    hilbert_function(J_omega, l + 1 + ctx.W.shift);
    if (lhs != rhs) v.degree_shift = false;
  }
  return v;
}

struct OmegaContainmentVerdict {
  bool module_equality = false;   // J^i w :_w m^j = (J^i :_R m^j) w
  bool artinian_equality = false; // mbar^s = 0 : (0 : mbar^s) in R/J^[i]
  bool agree() const { return module_equality == artinian_equality; }
};

// The two sides of the double-annihilator equivalence, each computed
// independently; they must always agree.
inline OmegaContainmentVerdict verify_omegacontainment(const GradedContext& ctx,
                                                       int i, int j) {
  if (j < ctx.a() + ctx.d())
    throw PreconditionError("requires j >= a+d");
  OmegaContainmentVerdict v;
  int d = ctx.d();
  int s = j + (i - 1) * (d - 1);

  Ideal Q = ctx.colon_ideal(i, j);
  Ideal Ji_omega = i <= 0 ? ideal_sum(ctx.W.link, ctx.W.beta)
                          : ideal_sum(ideal_product(ideal_power(ctx.J, i), ctx.W.link),
                                      ctx.W.beta);
  Ideal Q_omega = ideal_sum(ideal_product(Q, ctx.W.link), ctx.W.beta);
  v.module_equality = true;
  for (int delta = -ctx.a(); delta <= std::max(ctx.cutoff, i - j + d + 2); ++delta) {
    long long colon_dim = detail::colon_piece_dim(ctx, Ji_omega, delta, j);
    long long qomega_dim =
        hilbert_function(ctx.W.beta, delta + ctx.W.shift) -
        hilbert_function(Q_omega, delta + ctx.W.shift);
    if (colon_dim != qomega_dim) v.module_equality = false;
  }

  Ideal A = i <= 0 ? Ideal::unit(ctx.I.ring())
                   : ideal_sum(bracket_power(ctx.I.ring(), ctx.sop, i), ctx.I);
  Ideal ms = ideal_power(ctx.maximal(), s);
  Ideal socle = ideal_quotient(A, ms);
  Ideal doubled = ideal_quotient(A, socle);
  v.artinian_equality = doubled.equals(ideal_sum(A, ms));
  return v;
}

struct AnnFormulaVerdict {
  bool degreewise = false;        // [ann]_i = [J^{i+j-d+t+1} : m^j]_i for i <= cutoff
  bool le_t_equality = false;     // ann([w]_{<=t} R) = ann([w]_t R)
  bool dim1_applicable = false;
  bool dim1_structure = false;    // k[y]-module shape of the top piece
  bool pass() const {
    return degreewise && le_t_equality && (!dim1_applicable || dim1_structure);
  }
};

// The annihilator of the submodule generated by [omega]_t must be the
// direct sum over degrees i of [J^{i+j-d+t+1} : m^j]_i.
inline AnnFormulaVerdict verify_ann_formula(const GradedContext& ctx, int t,
                                            int j, int cutoff) {
  if (j < ctx.a() + ctx.d())
    throw PreconditionError("requires j >= a+d");
  AnnFormulaVerdict v;
  int d = ctx.d();
  Ideal ann = ann_component(ctx.W, t);

  v.degreewise = true;
  for (int i = 0; i <= cutoff; ++i) {
    Ideal Ci = ctx.colon_ideal(i + j - d + t + 1, j);
    if (!piece_equal(ann, Ci, i)) v.degreewise = false;
  }

  if (t < -ctx.a()) {
    v.le_t_equality = ann.is_unit();
  } else {
    Ideal meet = ann_component(ctx.W, -ctx.a());
    for (int u = -ctx.a() + 1; u <= t; ++u)
      meet = ideal_intersection(meet, ann_component(ctx.W, u));
    v.le_t_equality = meet.equals(ann);
  }

  if (d == 1) {
    v.dim1_applicable = true;
    v.dim1_structure = true;
    const Polynomial& y = ctx.sop[0];
    Ideal Qj = ctx.colon_ideal(j, j);
    for (int i = std::max(0, -t); i <= cutoff; ++i) {
      // span of y^{i+t} [Q_j]_{-t} inside [R]_i
      std::vector<Polynomial> span;
      if (-t >= 0)
        for (const auto& vgen : ideal_piece_span(Qj, -t))
          span.push_back(vgen * y.pow(i + t));
      long long ann_dim = hilbert_function(ctx.I, i) - hilbert_function(ann, i);
      auto monos = monomials_of_degree(ctx.I.ring(), i);
      auto reduced = span_basis_mod(span, ctx.I.groebner(), monos);
      if (static_cast<long long>(reduced.size()) != ann_dim)
        v.dim1_structure = false;
      for (const auto& f : span)
        if (!ann.contains(f)) v.dim1_structure = false;
    }
  }
  return v;
}

struct ColonStructureVerdict {
  bool sandwich_lower = false;      // m^{i-j+a+d} <= Q
  bool sandwich_upper = false;      // Q <= m^{i-j+b+d}
  bool reconstruction = false;      // Q = m^{i-j+a+d} + N from annihilator pieces
  std::optional<bool> height_zero;  // dim R/N = dim R, when N != 0
  std::optional<bool> one_degree_rule;  // Q generated in one degree => Q = m^{..}
  std::optional<bool> level_rule;       // level rings: Q = m^{i-j+a+d}
  bool pass() const {
    return sandwich_lower && sandwich_upper && reconstruction &&
           height_zero.value_or(true) && one_degree_rule.value_or(true) &&
           level_rule.value_or(true);
  }
};

// The corollaries describing Q = J^i : m^j: the sandwich between powers of
// m, the reconstruction from annihilators of omega components, the height
// of the correction term, and the level / one-degree collapse rules.
inline ColonStructureVerdict verify_colon_structure(const GradedContext& ctx,
                                                    int i, int j) {
  if (j < ctx.a() + ctx.d())
    throw PreconditionError("requires j >= a+d");
  ColonStructureVerdict v;
  int a = ctx.a(), b = ctx.b(), d = ctx.d();
  Ideal Q = ctx.colon_ideal(i, j);
  Ideal m = ctx.maximal();

  Ideal lower = ideal_sum(ideal_power(m, i - j + a + d), ctx.I);
  Ideal upper = ideal_sum(ideal_power(m, i - j + b + d), ctx.I);
  v.sandwich_lower = Q.contains(lower);
  v.sandwich_upper = upper.contains(Q);

  std::vector<Polynomial> n_gens;
  for (int l = std::max(0, i - j + b + d); l <= i - j + a + d - 1; ++l) {
    Ideal ann = ann_component(ctx.W, i - j - l + d - 1);
    for (auto& f : ideal_piece_span(ann, l)) n_gens.push_back(std::move(f));
  }
  Ideal N(ctx.I.ring(), n_gens);
  v.reconstruction = Q.equals(ideal_sum(ideal_sum(lower, N), ctx.I));

  if (!N.is_zero())
    v.height_zero = hilbert_series(ideal_sum(N, ctx.I)).dimension == d;

  // minimal generator degrees of Q as an R-ideal, by graded Nakayama
  Ideal mQ = ideal_sum(ideal_product(m, Q), ctx.I);
  std::vector<int> degrees;
  for (int deg = 0; deg <= i - j + a + d; ++deg) {
    long long total = hilbert_function(ctx.I, deg) - hilbert_function(Q, deg);
    long long inside = hilbert_function(ctx.I, deg) - hilbert_function(mQ, deg);
    for (long long k = inside; k < total; ++k) degrees.push_back(deg);
  }
  bool one_degree = !degrees.empty() &&
                    degrees.front() == degrees.back();
  if (one_degree) v.one_degree_rule = Q.equals(lower);
  if (ctx.inv.is_level) v.level_rule = Q.equals(lower);
  return v;
}

struct TruncationRemarkVerdict {
  bool truncation_generated = false;  // [w]_{>= i-a} = m^i [w]_{-a}
  bool module_equality = false;       // J^i w : m^(a+d) = (J^i : m^(a+d)) w
  bool faithful = false;              // [w]_{-a} R faithful
  bool agree() const {
    return truncation_generated == (module_equality && faithful);
  }
};

// The truncation [w]_{>= i-a} is generated by the degree -a component
// exactly when the colon-module equality holds and [w]_{-a}R is faithful.
// Both sides computed independently.
inline TruncationRemarkVerdict verify_truncation_remark(const GradedContext& ctx,
                                                        int i) {
  if (i < ctx.a() + ctx.d())
    throw PreconditionError("requires i >= a+d");
  TruncationRemarkVerdict v;
  int a = ctx.a();
  auto socle = omega_component_basis(ctx.W, -a);
  Ideal lifts(ctx.I.ring(), socle);
  Ideal sub = ideal_sum(
      ideal_product(ideal_power(ctx.maximal(), i), lifts), ctx.W.beta);
  v.truncation_generated = true;
  for (int delta = i - a; delta <= i - a + 3; ++delta) {
    long long lhs = omega_dim(ctx.W, delta);
    long long rhs = hilbert_function(ctx.W.beta, delta + ctx.W.shift) -
                    hilbert_function(sub, delta + ctx.W.shift);
    if (lhs != rhs) v.truncation_generated = false;
  }
  v.module_equality =
      verify_omegacontainment(ctx, i, a + ctx.d()).module_equality;
  v.faithful = ann_component(ctx.W, -a).equals(ctx.I);
  return v;
}

struct FaithfulStepVerdict {
  bool applicable = false;            // d = 1 only
  bool implication = true;            // equality at i propagates to i+1, i+2
  std::vector<bool> equals_power;     // J^i : m^(a+1) = m^i for i = a+1, ...
};

// In dimension one, J^i : m^(a+1) = m^i for a single i >= a+1 already
// forces the same equality at i+1 and i+2.
inline FaithfulStepVerdict verify_faithful_step(const GradedContext& ctx) {
  FaithfulStepVerdict v;
  if (ctx.d() != 1) return v;
  v.applicable = true;
  int a = ctx.a();
  for (int i = a + 1; i <= a + 5; ++i) {
    Ideal lhs = ctx.colon_ideal(i, a + 1);
    Ideal rhs = ideal_sum(ideal_power(ctx.maximal(), i), ctx.I);
    v.equals_power.push_back(lhs.equals(rhs));
  }
  for (std::size_t k = 0; k + 2 < v.equals_power.size(); ++k)
    if (v.equals_power[k] && !(v.equals_power[k + 1] && v.equals_power[k + 2]))
      v.implication = false;
  return v;
}

struct BoundCheck {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string note;
};

namespace detail {

// Initial degree of the R-ideal (A + I)/I for A strictly above I; the
// first degree where the Hilbert functions split.
inline std::optional<int> r_indeg(const Ideal& A, const Ideal& I) {
  int hi = 0;
  for (const auto& g : A.groebner()) hi = std::max(hi, g.degree());
  for (int deg = 0; deg <= hi; ++deg)
    if (hilbert_function(A, deg) < hilbert_function(I, deg)) return deg;
  return std::nullopt;
}

inline std::vector<int> r_generator_degrees(const Ideal& A, const Ideal& I,
                                            const Ideal& maximal) {
  Ideal mA = ideal_sum(ideal_product(maximal, A), I);
  int hi = 0;
  for (const auto& g : A.groebner()) hi = std::max(hi, g.degree());
  std::vector<int> degrees;
  for (int deg = 0; deg <= hi; ++deg) {
    long long total = hilbert_function(I, deg) - hilbert_function(A, deg);
    long long inside = hilbert_function(I, deg) - hilbert_function(mA, deg);
    for (long long k = inside; k < total; ++k) degrees.push_back(deg);
  }
  return degrees;
}

}  // namespace detail

// The initial-degree bounds: the lower bound c+d+1-e(R/H) for annihilators
// of ideals, the alpha upper bound for component annihilators, the
// regularity consequence, and the type-2 resolution bound.
inline std::vector<BoundCheck> verify_degree_bounds(
    const GradedContext& ctx,
    const std::vector<std::pair<std::string, Ideal>>& test_ideals) {
  std::vector<BoundCheck> checks;
  int a = ctx.a(), d = ctx.d(), c = ctx.inv.c;
  std::size_t n = ctx.I.ring()->nvars();

  for (const auto& [label, H] : test_ideals) {
    BoundCheck chk;
    chk.name = "indeg(0:H) >= c+d+1-e(R/H) [" + label + "]";
    Ideal HR = ideal_sum(H, ctx.I);
    if (HR.is_unit()) {
      chk.applicable = false;
      chk.note = "H is the unit ideal";
      checks.push_back(chk);
      continue;
    }
    Ideal ann = ideal_quotient(ctx.I, HR);
    if (ann.equals(ctx.I)) {
      chk.applicable = false;
      chk.note = "0:H = 0, bound vacuous";
      checks.push_back(chk);
      continue;
    }
    auto indeg = detail::r_indeg(ann, ctx.I);
    long long e = hilbert_series(HR).multiplicity();
    chk.pass = indeg && *indeg >= c + d + 1 - static_cast<int>(e);
    chk.note = "indeg=" + std::to_string(indeg.value_or(-1)) +
               " e=" + std::to_string(e);
    checks.push_back(chk);
  }

  for (int t = -a; t <= std::min(d, -a + 4); ++t) {
    Ideal ann = ann_component(ctx.W, t);
    if (ann.is_unit() || ann.equals(ctx.I)) continue;
    auto indeg = detail::r_indeg(ann, ctx.I);

    BoundCheck alpha;
    alpha.name = "indeg(ann([w]_" + std::to_string(t) + "R)) <= alpha_ub+d";
    if (!ctx.is_reduced) {
      alpha.applicable = false;
      alpha.note = "input not known reduced";
    } else {
      alpha.pass = indeg && *indeg <= ctx.inv.alpha_ub + d;
      alpha.note = "indeg=" + std::to_string(indeg.value_or(-1)) +
                   " alpha_ub=" + std::to_string(ctx.inv.alpha_ub);
    }
    checks.push_back(alpha);

    BoundCheck reg;
    reg.name = "gens(ann([w]_" + std::to_string(t) + "R)) in degrees <= d-t-1";
    auto degrees = detail::r_generator_degrees(ann, ctx.I, ctx.maximal());
    bool ok = std::all_of(degrees.begin(), degrees.end(),
                          [&](int deg) { return deg <= d - t - 1; });
    if (ok) {
      reg.pass = true;
    } else {
      // valid when the bidual quotient is CM, which is not decided here
      reg.applicable = false;
      reg.note = "hypothesis presumably violated";
    }
    checks.push_back(reg);
  }

  if (ctx.inv.type == 2 && ctx.is_reduced) {
    BoundCheck t2;
    t2.name = "type-2 resolution bound on indeg(ann([w]_{-a}R))";
    Ideal ann = ann_component(ctx.W, -a);
    if (ann.equals(ctx.I)) {
      t2.applicable = false;
      t2.note = "[w]_{-a}R faithful, bound vacuous";
    } else {
      int g = ctx.inv.codim;
      auto tor_g = koszul_tor_dims(ctx.I, g, 0, static_cast<int>(n) + a + 1);
      auto tor_g1 = koszul_tor_dims(ctx.I, g - 1, 0, static_cast<int>(n) + a + 1);
      std::vector<int> ls, ks;
      for (const auto& [deg, dim] : tor_g)
        for (long long k = 0; k < dim; ++k) ls.push_back(deg);
      for (const auto& [deg, dim] : tor_g1)
        for (long long k = 0; k < dim; ++k) ks.push_back(deg);
      if (ls.size() != 2 || static_cast<int>(ks.size()) < g + 1) {
        t2.applicable = false;
        t2.note = "resolution data outside the type-2 shape";
      } else {
        int l1 = ls[0], l2 = ls[1];
        int bound = g * l1 + l2 - g;
        for (int k = 0; k <= g; ++k) bound -= ks[static_cast<std::size_t>(k)];
        auto indeg = detail::r_indeg(ann, ctx.I);
        t2.pass = indeg && *indeg <= bound;
        t2.note = "indeg=" + std::to_string(indeg.value_or(-1)) +
                  " bound=" + std::to_string(bound);
        // almost complete intersections of embedding codimension 2
        if (static_cast<int>(n) - d == 2 &&
            ideal_generator_degrees(ctx.I).size() == 3 && t2.pass) {
          BoundCheck c2;
          c2.name = "codim-2 almost-ci bound: indeg <= a+d";
          c2.pass = indeg && *indeg <= a + d;
          checks.push_back(c2);
        }
      }
    }
    checks.push_back(t2);
  }
  return checks;
}

}  // namespace corecalc

#endif  // CORECALC_VERIFIERS_HPP
