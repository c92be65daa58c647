#ifndef CORECALC_HILBERT_HPP
#define CORECALC_HILBERT_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "corecalc/groebner.hpp"
#include "corecalc/rng.hpp"

namespace corecalc {

// H_{S/I}(t) written as h(t) / (1-t)^d with h(1) != 0: `numerator` holds
// the coefficients of h and `dimension` is the remaining pole order, i.e.
// the Krull dimension of S/I.
struct HilbertSeries {
  std::vector<long long> numerator;
  int dimension = 0;

  long long multiplicity() const {
    long long e = 0;
    for (auto c : numerator) e += c;
    return e;
  }

  int numerator_degree() const {
    return static_cast<int>(numerator.size()) - 1;
  }

  // a-invariant of a Cohen-Macaulay quotient: deg h - d.
  int a_invariant_cm() const { return numerator_degree() - dimension; }

  // Coefficient of t^deg in the expansion of h(t)/(1-t)^d.
  long long coefficient(int deg) const {
    if (deg < 0) return 0;
    long long acc = 0;
    for (std::size_t i = 0; i < numerator.size(); ++i) {
      int shift = deg - static_cast<int>(i);
      if (shift < 0) continue;
      if (dimension == 0) {
        if (shift == 0) acc += numerator[i];
      } else {
        // C(shift + d - 1, d - 1)
        long long b = 1;
        for (int k = 1; k <= dimension - 1; ++k)
          b = b * (shift + k) / k;
        acc += numerator[i] * b;
      }
    }
    return acc;
  }
};

namespace detail {

// Numerator of the Hilbert series of S/(monomials), over (1-t)^n, by the
// standard pivot-variable splitting N(I) = N(I + (x)) + t * N(I : x).
class HilbertNumerator {
 public:
  explicit HilbertNumerator(std::size_t nvars) : nvars_(nvars) {}

  std::vector<long long> run(std::vector<Monomial> gens) {
    std::vector<long long> out;
    recurse(minimalize(std::move(gens)), 0, out);
    return out;
  }

 private:
  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      return a.degree() < b.degree();
    });
    for (auto& g : gens) {
      bool redundant = false;
      for (const auto& kept : out)
        if (kept.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) out.push_back(std::move(g));
    }
    return out;
  }

  static void add_term(std::vector<long long>& poly, int deg, long long c) {
    if (deg >= static_cast<int>(poly.size())) poly.resize(deg + 1, 0);
    poly[deg] += c;
  }

  void recurse(std::vector<Monomial> gens, int shift, std::vector<long long>& out) {
    if (gens.empty()) {
      add_term(out, shift, 1);
      return;
    }
    if (gens.size() == 1 && gens[0].is_one()) return;  // unit ideal: zero
    // pure powers of distinct variables have a closed-form numerator
    bool pure = true;
    std::vector<int> support;
    for (const auto& g : gens) {
      int var = -1;
      for (std::size_t i = 0; i < nvars_ && pure; ++i) {
        if (g.exponent(i) > 0) {
          if (var >= 0) pure = false;
          var = static_cast<int>(i);
        }
      }
      if (!pure) break;
      support.push_back(g.degree());
    }
    if (pure) {
      std::vector<long long> acc{1};
      for (int a : support) {
        std::vector<long long> next(acc.size() + a, 0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
          next[i] += acc[i];
          next[i + a] -= acc[i];
        }
        acc = std::move(next);
      }
      for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) add_term(out, shift + static_cast<int>(i), acc[i]);
      return;
    }
    // pivot on the most frequent variable
    std::vector<int> freq(nvars_, 0);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (g.exponent(i) > 0) ++freq[i];
    std::size_t pivot = static_cast<std::size_t>(
        std::max_element(freq.begin(), freq.end()) - freq.begin());

    std::vector<Monomial> plus;   // gens + (x_pivot)
    std::vector<Monomial> colon;  // gens : x_pivot
    for (const auto& g : gens) {
      if (g.exponent(pivot) == 0) plus.push_back(g);
      std::vector<int> e = g.exponents();
      if (e[pivot] > 0) --e[pivot];
      colon.push_back(Monomial(std::move(e)));
    }
    plus.push_back(Monomial::variable(nvars_, pivot));
    recurse(minimalize(std::move(plus)), shift, out);
    recurse(minimalize(std::move(colon)), shift + 1, out);
  }

  std::size_t nvars_;
};

inline std::vector<Monomial> leading_monomials(const Ideal& I) {
  std::vector<Monomial> lts;
  for (const auto& g : I.groebner()) lts.push_back(g.leading_monomial());
  return lts;
}

}  // namespace detail

// Hilbert series of S/I for a proper homogeneous ideal I, computed from
// the leading-term ideal.
inline HilbertSeries hilbert_series(const Ideal& I) {
  if (!I.is_homogeneous())
    throw PreconditionError("hilbert series requires a homogeneous ideal");
  if (I.is_unit()) throw PreconditionError("hilbert series of the unit ideal");
  std::size_t n = I.ring()->nvars();
  auto numer = detail::HilbertNumerator(n).run(detail::leading_monomials(I));
  while (!numer.empty() && numer.back() == 0) numer.pop_back();

  // cancel factors of (1 - t); each division drops the pole order by one
  int cancelled = 0;
  for (;;) {
    long long at_one = 0;
    for (auto c : numer) at_one += c;
    if (at_one != 0) break;
    // synthetic division by (1 - t): q_i = sum_{k <= i} c_k
    std::vector<long long> q(numer.size() - 1, 0);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < numer.size(); ++i) {
      run += numer[i];
      q[i] = run;
    }
    numer = std::move(q);
    ++cancelled;
  }
  HilbertSeries out;
  out.numerator = std::move(numer);
  out.dimension = static_cast<int>(n) - cancelled;
  return out;
}

// Vector-space dimension of [S/I]_deg, counted directly as the number of
// standard monomials; the series expansion is the independent route.
inline long long hilbert_function(const Ideal& I, int deg);

// All monomials of the given total degree, sorted descending by the ring
// order (the column convention used throughout).
inline std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int deg) {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  std::size_t n = ring->nvars();
  std::vector<int> exp(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int rest) -> void {
    if (i + 1 == n) {
      exp[i] = rest;
      out.push_back(Monomial(exp));
      return;
    }
    for (int e = rest; e >= 0; --e) {
      exp[i] = e;
      self(self, i + 1, rest - e);
    }
    exp[i] = 0;
  };
  if (n == 0) {
    if (deg == 0) out.push_back(Monomial(std::vector<int>{}));
    return out;
  }
  rec(rec, 0, deg);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return ring->order.greater(a, b);
  });
  return out;
}

// Standard monomials of degree deg: those not divisible by any leading
// term of the ideal.
inline std::vector<Monomial> standard_monomials(const Ideal& I, int deg) {
  auto lts = detail::leading_monomials(I);
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(I.ring(), deg)) {
    bool reducible = false;
    for (const auto& lt : lts)
      if (lt.divides(m)) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(std::move(m));
  }
  return out;
}

inline long long hilbert_function(const Ideal& I, int deg) {
  if (!I.is_homogeneous())
    throw PreconditionError("hilbert function requires a homogeneous ideal");
  if (deg < 0) return 0;
  return static_cast<long long>(standard_monomials(I, deg).size());
}

// Total k-dimension of S/I; requires dim S/I = 0. Works for arbitrary
// (also non-homogeneous) ideals via the staircase of the leading terms.
inline long long artinian_length(const Ideal& I) {
  auto lts = detail::leading_monomials(I);
  if (lts.empty()) throw PreconditionError("length of a positive-dimensional quotient");
  // zero-dimensionality: every variable appears as a pure power
  std::size_t n = I.ring()->nvars();
  std::vector<int> cap(n, -1);
  for (const auto& lt : lts) {
    int var = -1;
    bool purepow = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (lt.exponent(i) > 0) {
        if (var >= 0) purepow = false;
        var = static_cast<int>(i);
      }
    }
    if (purepow && var >= 0)
      cap[var] = cap[var] < 0 ? lt.exponent(var)
                              : std::min(cap[var], lt.exponent(var));
    if (purepow && var < 0) return 0;  // unit ideal
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cap[i] < 0)
      throw PreconditionError("length of a positive-dimensional quotient");
  // enumerate monomials under the pure-power box, count the standard ones
  long long count = 0;
  std::vector<int> exp(n, 0);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Monomial m(exp);
      for (const auto& lt : lts)
        if (lt.divides(m)) return;
      ++count;
      return;
    }
    for (int e = 0; e < cap[i]; ++e) {
      exp[i] = e;
      self(self, i + 1);
    }
    exp[i] = 0;
  };
  rec(rec, 0);
  return count;
}

inline bool is_zero_dimensional(const Ideal& I) {
  if (I.is_unit()) return true;
  auto lts = detail::leading_monomials(I);
  std::size_t n = I.ring()->nvars();
  std::vector<bool> seen(n, false);
  for (const auto& lt : lts) {
    int var = -1;
    bool purepow = true;
    for (std::size_t i = 0; i < n; ++i)
      if (lt.exponent(i) > 0) {
        if (var >= 0) purepow = false;
        var = static_cast<int>(i);
      }
    if (purepow && var >= 0) seen[var] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline FieldScalar random_scalar(const Field& field, Rng& rng) {
  if (field.is_rationals())
    return FieldScalar::from_int(field, static_cast<long long>(rng.uniform(kDefaultPrime)));
  return FieldScalar::from_int(field, static_cast<long long>(
                                          rng.uniform(field.characteristic())));
}

inline Polynomial random_form(const RingPtr& ring, int deg, Rng& rng) {
  std::vector<Term> terms;
  for (auto& m : monomials_of_degree(ring, deg))
    terms.push_back({std::move(m), random_scalar(ring->field, rng)});
  return Polynomial::from_terms(ring, std::move(terms));
}

// d random-coefficient linear forms cutting R = S/I down to dimension
// zero. Deterministic under the seed carried by rng; fails after 20
// attempts, which signals a tiny field or a bug.
inline std::vector<Polynomial> generic_linear_sop(const Ideal& I, Rng& rng) {
  if (I.is_unit()) throw PreconditionError("system of parameters of the zero ring");
  int d = hilbert_series(I).dimension;
  if (d == 0) return {};
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Polynomial> forms;
    std::vector<Polynomial> gens = I.generators();
    for (int k = 0; k < d; ++k) {
      Polynomial y = random_form(I.ring(), 1, rng);
      forms.push_back(y);
      gens.push_back(std::move(y));
    }
    Ideal cut(I.ring(), std::move(gens));
    if (!cut.is_unit() && hilbert_series(cut).dimension == 0) return forms;
  }
  throw Error("could not find linear system of parameters");
}

// Length of R/(linear sop) equals the multiplicity exactly when R is
// Cohen-Macaulay; used as the effective CM test throughout.
inline bool cohen_macaulay(const Ideal& I, Rng& rng) {
  auto series = hilbert_series(I);
  if (series.dimension == 0) return true;
  auto sop = generic_linear_sop(I, rng);
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), sop.begin(), sop.end());
  long long len = artinian_length(Ideal(I.ring(), std::move(gens)));
  return len == series.multiplicity();
}

}  // namespace corecalc

#endif  // CORECALC_HILBERT_HPP
