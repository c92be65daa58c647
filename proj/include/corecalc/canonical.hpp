#ifndef CORECALC_CANONICAL_HPP
#define CORECALC_CANONICAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corecalc/graded.hpp"

namespace corecalc {

// Graded canonical module of R = S/I presented by linkage: a regular
// sequence beta of g forms of one degree delta inside I, the link ideal
// L = (beta) : I, and the shift sigma = g*delta - n, so that
// [omega]_t = [L/(beta)]_{t+sigma} as vector spaces.
struct CanonicalRep {
  Ideal base;                               // I
  std::vector<Polynomial> regular_sequence; // beta
  Ideal beta;                               // (beta)
  Ideal link;                               // L
  int shift = 0;                            // sigma
  int codim = 0;                            // g
  int a = 0;                                // a-invariant, cross-checked
};

struct InvariantReport {
  int dimension = 0;
  int codim = 0;
  long long multiplicity = 0;
  bool is_cm = false;
  // the fields below are only meaningful when is_cm holds
  int a = 0;
  int b = 0;
  int c = 0;
  int type = 0;
  bool is_level = false;
  bool is_gorenstein = false;
  int alpha_ub = 0;
  std::vector<int> omega_generator_degrees;
};

// Regular sequence of g generic forms, all of degree delta = the largest
// generator degree, inside I; validated by codimension and retried with
// fresh coefficients on failure.
inline std::vector<Polynomial> choose_regular_sequence(const Ideal& I, Rng& rng) {
  if (I.is_unit()) throw PreconditionError("regular sequence in the unit ideal");
  auto series = hilbert_series(I);
  std::size_t n = I.ring()->nvars();
  int g = static_cast<int>(n) - series.dimension;
  if (g == 0) return {};
  int delta = 0;
  for (const auto& f : I.generators()) delta = std::max(delta, f.degree());
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Polynomial> beta;
    for (int k = 0; k < g; ++k) {
      Polynomial combo = Polynomial::zero(I.ring());
      for (const auto& f : I.generators()) {
        if (f.is_zero()) continue;
        combo = combo + random_form(I.ring(), delta - f.degree(), rng) * f;
      }
      beta.push_back(std::move(combo));
    }
    bool nonzero = std::all_of(beta.begin(), beta.end(),
                               [](const Polynomial& p) { return !p.is_zero(); });
    if (!nonzero) continue;
    Ideal B(I.ring(), beta);
    if (hilbert_series(B).dimension == static_cast<int>(n) - g) return beta;
  }
  throw Error("no regular sequence found");
}

// dim_k [omega]_t computed through the linkage presentation.
inline long long omega_dim(const CanonicalRep& W, int t) {
  int deg = t + W.shift;
  if (deg < 0) return 0;
  return hilbert_function(W.beta, deg) - hilbert_function(W.link, deg);
}

// dim_k [omega]_t predicted by local duality from the Hilbert series of a
// CM quotient; the independent cross-check of the linkage data.
inline long long omega_dim_expected(const HilbertSeries& series, int t) {
  long long acc = 0;
  int d = series.dimension;
  for (std::size_t i = 0; i < series.numerator.size(); ++i) {
    int ii = static_cast<int>(i);
    if (d == 0) {
      if (t == -ii) acc += series.numerator[i];
      continue;
    }
    if (t - d + ii < 0) continue;
    long long b = 1;  // C(t + ii - 1, d - 1)
    for (int k = 1; k <= d - 1; ++k) b = b * (t + ii - d + k) / k;
    acc += series.numerator[i] * b;
  }
  return acc;
}

// Canonical module of a Cohen-Macaulay quotient via linkage. Verifies the
// component dimensions against local duality before returning.
inline CanonicalRep canonical_rep(const Ideal& I, Rng& rng) {
  auto series = hilbert_series(I);
  if (!cohen_macaulay(I, rng))
    throw PreconditionError("canonical module requires a Cohen-Macaulay quotient");
  CanonicalRep W;
  W.base = I;
  W.regular_sequence = choose_regular_sequence(I, rng);
  W.codim = static_cast<int>(W.regular_sequence.size());
  W.beta = Ideal(I.ring(), W.regular_sequence);
  W.link = W.codim == 0 ? Ideal::unit(I.ring())
                        : ideal_quotient(W.beta, I);
  int delta = W.codim == 0 ? 0 : W.regular_sequence.front().degree();
  W.shift = W.codim * delta - static_cast<int>(I.ring()->nvars());
  W.a = series.a_invariant_cm();

  // indeg(omega) must be -a, and the first few component dimensions must
  // match the duality prediction
  for (int t = -W.a - 2; t <= -W.a + 4; ++t) {
    if (omega_dim(W, t) != omega_dim_expected(series, t))
      throw InternalError("linkage presentation disagrees with local duality");
  }
  if (omega_dim(W, -W.a) <= 0)
    throw InternalError("canonical module vanishes in degree -a");
  return W;
}

// Basis of [omega]_t as polynomials in the link ideal, reduced modulo the
// regular sequence; empty below degree -a.
inline std::vector<Polynomial> omega_component_basis(const CanonicalRep& W, int t) {
  int deg = t + W.shift;
  if (deg < 0) return {};
  auto monos = monomials_of_degree(W.base.ring(), deg);
  return span_basis_mod(ideal_piece_span(W.link, deg), W.beta.groebner(), monos);
}

// ann_R([omega]_t R), returned as the S-ideal containing I; computed as
// (beta) : H with H = (beta) + lifts of a basis of the component.
inline Ideal ann_component(const CanonicalRep& W, int t) {
  auto lifts = omega_component_basis(W, t);
  if (lifts.empty()) return Ideal::unit(W.base.ring());
  Ideal H = ideal_sum(W.beta, Ideal(W.base.ring(), lifts));
  Ideal ann = W.codim == 0 ? Ideal::zero(W.base.ring())
                           : ideal_quotient(W.beta, H);
  if (!ann.contains(W.base))
    throw InternalError("component annihilator lost the base ideal");
  return ann;
}

// Degrees (as omega-degrees t) of a minimal homogeneous generating set of
// omega, via graded Nakayama on the linkage presentation.
inline std::vector<int> omega_generator_degrees(const CanonicalRep& W, int dim) {
  Ideal mL = ideal_sum(ideal_product(Ideal::maximal(W.base.ring()), W.link), W.beta);
  std::vector<int> ts;
  for (int t = -W.a; t <= dim; ++t) {
    int deg = t + W.shift;
    if (deg < 0) continue;
    long long total = omega_dim(W, t);
    long long inside =
        hilbert_function(W.beta, deg) - hilbert_function(mL, deg);
    for (long long k = inside; k < total; ++k) ts.push_back(t);
  }
  return ts;
}

// Minimal generator degrees of the homogeneous ideal I itself.
inline std::vector<int> ideal_generator_degrees(const Ideal& I) {
  if (I.is_zero()) return {};
  Ideal mI = ideal_product(Ideal::maximal(I.ring()), I);
  int hi = 0;
  for (const auto& g : I.groebner()) hi = std::max(hi, g.degree());
  std::vector<int> degrees;
  for (int deg = 0; deg <= hi; ++deg) {
    long long total = ideal_piece_dim(I, deg);
    long long inside = ideal_piece_dim(mI, deg);
    for (long long k = inside; k < total; ++k) degrees.push_back(deg);
  }
  return degrees;
}

// Full invariant report. Non-CM inputs get dimension, codimension and
// multiplicity only, flagged by is_cm = false.
inline InvariantReport invariants(const Ideal& I, Rng& rng) {
  auto series = hilbert_series(I);
  InvariantReport rep;
  rep.dimension = series.dimension;
  rep.codim = static_cast<int>(I.ring()->nvars()) - series.dimension;
  rep.multiplicity = series.multiplicity();
  rep.is_cm = cohen_macaulay(I, rng);
  if (!rep.is_cm) return rep;

  CanonicalRep W = canonical_rep(I, rng);
  rep.a = W.a;

  rep.omega_generator_degrees = omega_generator_degrees(W, rep.dimension);
  if (rep.omega_generator_degrees.empty())
    throw InternalError("canonical module has no generators below dimension degree");
  rep.type = static_cast<int>(rep.omega_generator_degrees.size());
  int max_gen_degree = rep.omega_generator_degrees.back();
  rep.c = -max_gen_degree;
  rep.is_level = rep.omega_generator_degrees.front() == max_gen_degree;
  rep.is_gorenstein = rep.type == 1;

  rep.b = 1;  // sentinel: overwritten below or rejected
  bool found = false;
  for (int t = -rep.a; t <= rep.dimension; ++t) {
    if (ann_component(W, t).equals(I)) {
      rep.b = -t;
      found = true;
      break;
    }
  }
  if (!found)
    throw InternalError("no faithful component found up to degree d");

  auto gen_degrees = ideal_generator_degrees(I);
  std::sort(gen_degrees.begin(), gen_degrees.end(), std::greater<int>());
  int sum = 0;
  for (int k = 0; k < rep.codim && k < static_cast<int>(gen_degrees.size()); ++k)
    sum += gen_degrees[static_cast<std::size_t>(k)];
  rep.alpha_ub = sum - static_cast<int>(I.ring()->nvars());

  if (!(rep.c <= rep.b && rep.b <= rep.a))
    throw InternalError("invariant ordering c <= b <= a violated");
  if (rep.c < -rep.dimension)
    throw InternalError("c < -d violated");
  if (rep.a + rep.dimension < 0)
    throw InternalError("a + d < 0");
  if (rep.is_gorenstein && !rep.is_level)
    throw InternalError("Gorenstein ring not level");
  return rep;
}

// Graded dimensions of Tor_q^S(k, R) over a degree window, via the Koszul
// complex on all variables tensored with R.
inline std::map<int, long long> koszul_tor_dims(const Ideal& I, int q,
                                                int lo, int hi) {
  std::size_t n = I.ring()->nvars();
  if (q < 0 || q > static_cast<int>(n))
    return {};
  const Field& field = I.ring()->field;

  // subsets of {0..n-1} of a given size, lexicographic
  auto subsets = [&](int size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
      }
      for (std::size_t v = from; v < n; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };

  auto index_of = [](const std::vector<std::vector<std::size_t>>& sets,
                     const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (sets[i] == s) return static_cast<long long>(i);
    return static_cast<long long>(-1);
  };

  // rank of the Koszul differential d_k in internal degree deg
  auto differential_rank = [&](int k, int deg) -> long long {
    if (k <= 0 || k > static_cast<int>(n)) return 0;
    auto dom_sets = subsets(k);
    auto cod_sets = subsets(k - 1);
    auto dom_basis = standard_monomials(I, deg - k);
    auto cod_basis = standard_monomials(I, deg - k + 1);
    if (dom_basis.empty() || cod_basis.empty()) return 0;
    std::size_t rows = cod_sets.size() * cod_basis.size();
    std::size_t cols = dom_sets.size() * dom_basis.size();
    if (rows * cols > 40000000)
      throw Error("Koszul window too large at desk scale");
    auto cod_index = [&](const Monomial& m) -> long long {
      for (std::size_t i = 0; i < cod_basis.size(); ++i)
        if (cod_basis[i] == m) return static_cast<long long>(i);
      return -1;
    };
    Matrix mat(rows, cols, field);
    const auto& gb = I.groebner();
    for (std::size_t ds = 0; ds < dom_sets.size(); ++ds) {
      for (std::size_t db = 0; db < dom_basis.size(); ++db) {
        std::size_t col = ds * dom_basis.size() + db;
        for (std::size_t l = 0; l < dom_sets[ds].size(); ++l) {
          std::vector<std::size_t> rest = dom_sets[ds];
          std::size_t var = rest[l];
          rest.erase(rest.begin() + static_cast<long>(l));
          long long cs = index_of(cod_sets, rest);
          FieldScalar sign = (l % 2 == 0) ? FieldScalar::one(field)
                                          : -FieldScalar::one(field);
          Polynomial prod = normal_form(
              Polynomial::one(I.ring())
                  .times_term(FieldScalar::one(field),
                              dom_basis[db] * Monomial::variable(n, var)),
              gb);
          for (const auto& term : prod.terms()) {
            long long r = cod_index(term.mono);
            if (r < 0) throw InternalError("Koszul image escaped the basis");
            mat.at(static_cast<std::size_t>(cs) * cod_basis.size() +
                       static_cast<std::size_t>(r),
                   col) += sign * term.coeff;
          }
        }
      }
    }
    return static_cast<long long>(mat.rank());
  };

  std::map<int, long long> dims;
  for (int deg = lo; deg <= hi; ++deg) {
    long long dom = static_cast<long long>(subsets(q).size()) *
                    static_cast<long long>(standard_monomials(I, deg - q).size());
    long long rk_q = differential_rank(q, deg);
    long long rk_next = differential_rank(q + 1, deg);
    long long dim = dom - rk_q - rk_next;
    if (dim < 0) throw InternalError("negative Tor dimension");
    if (dim > 0) dims[deg] = dim;
  }
  return dims;
}

}  // namespace corecalc

#endif  // CORECALC_CANONICAL_HPP
