#ifndef CORECALC_GROEBNER_HPP
#define CORECALC_GROEBNER_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "corecalc/polynomial.hpp"

namespace corecalc {

// Remainder of f on division by a list of nonzero polynomials: no term of
// the remainder is divisible by any leading term of the basis, and
// f - remainder lies in the ideal the basis generates.
inline Polynomial normal_form(const Polynomial& f,
                              const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw PreconditionError("zero divisor polynomial");
  }
  Polynomial p = f;
  std::size_t done = 0;  // terms before `done` are already irreducible
  while (done < p.terms().size()) {
    const Term& t = p.terms()[done];
    const Polynomial* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.leading_monomial().divides(t.mono)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      ++done;
      continue;
    }
    FieldScalar c = t.coeff / divisor->leading_coeff();
    Monomial m = t.mono / divisor->leading_monomial();
    // cancels term `done`; introduces only strictly smaller monomials
    p.add_multiple(-c, m, *divisor);
  }
  return p;
}

// Quotient f / g; throws if the division is not exact.
inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw PreconditionError("division by zero polynomial");
  std::vector<Term> quotient;
  Polynomial p = f;
  while (!p.is_zero()) {
    if (!g.leading_monomial().divides(p.leading_monomial()))
      throw Error("inexact polynomial division");
    FieldScalar c = p.leading_coeff() / g.leading_coeff();
    Monomial m = p.leading_monomial() / g.leading_monomial();
    quotient.push_back({m, c});
    p.add_multiple(-c, m, g);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

namespace detail {

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  Polynomial s = f.times_term(g.leading_coeff(), l / f.leading_monomial());
  s.add_multiple(-f.leading_coeff(), l / g.leading_monomial(), g);
  return s;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
// normal selection strategy (minimal lcm degree).
class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      Polynomial h = normal_form(g, basis_);
      if (!h.is_zero()) add(h.monic());
      if (unit_) return unit_basis();
    }
    while (!pairs_.empty()) {
      Pair p = pop_pair();
      Polynomial s = s_polynomial(basis_[p.i], basis_[p.j]);
      Polynomial h = normal_form(s, basis_);
      if (!h.is_zero()) add(h.monic());
      if (unit_) return unit_basis();
    }
    return reduce(basis_);
  }

  // Interreduction to the unique reduced basis: monic, minimal leading
  // terms, fully tail-reduced, sorted ascending by leading monomial.
  std::vector<Polynomial> reduce(std::vector<Polynomial> g) const {
    g.erase(std::remove_if(g.begin(), g.end(),
                           [](const Polynomial& p) { return p.is_zero(); }),
            g.end());
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->order.less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial> minimal;
    for (auto& p : g) {
      bool redundant = false;
      for (const auto& q : minimal)
        if (q.leading_monomial().divides(p.leading_monomial())) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(std::move(p));
    }
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      out.push_back(normal_form(minimal[i], others).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->order.less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
  }

 private:
  std::vector<Polynomial> unit_basis() const {
    return {Polynomial::one(ring_)};
  }

  void add(Polynomial h) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    std::size_t t = basis_.size();
    const Monomial& lt = h.leading_monomial();

    // Gebauer-Moeller update of the pair set
    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < t; ++i) {
      Monomial l = basis_[i].leading_monomial().lcm(lt);
      fresh.push_back({i, t, std::move(l), 0});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      bool coprime = basis_[fresh[k].i].leading_monomial().coprime(lt);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t k2 = k + 1; k2 < fresh.size() && !dominated; ++k2)
          if (fresh[k2].lcm.divides(fresh[k].lcm)) dominated = true;
        for (const auto& d : kept)
          if (dominated) break;
          else if (d.lcm.divides(fresh[k].lcm)) dominated = true;
      }
      if (coprime || !dominated) kept.push_back(fresh[k]);
    }
    // product criterion: coprime leading terms reduce to zero
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [&](const Pair& p) {
                                return basis_[p.i].leading_monomial().coprime(lt);
                              }),
               kept.end());
    // chain criterion on the old pairs
    std::vector<Pair> survivors;
    for (auto& p : pairs_) {
      const Monomial& li = basis_[p.i].leading_monomial();
      const Monomial& lj = basis_[p.j].leading_monomial();
      bool killed = lt.divides(p.lcm) && li.lcm(lt) != p.lcm && lj.lcm(lt) != p.lcm;
      if (!killed) survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    for (auto& p : kept) {
      p.degree = p.lcm.degree();
      pairs_.push_back(std::move(p));
    }
    basis_.push_back(std::move(h));
  }

  Pair pop_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (pairs_[k].degree < pairs_[best].degree ||
          (pairs_[k].degree == pairs_[best].degree &&
           ring_->order.less(pairs_[k].lcm, pairs_[best].lcm)))
        best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<long>(best));
    return p;
  }

  RingPtr ring_;
  std::vector<Polynomial> basis_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
};

}  // namespace detail

// Unique reduced Groebner basis of the ideal the generators span.
inline std::vector<Polynomial> groebner_basis(const RingPtr& ring,
                                              const std::vector<Polynomial>& gens) {
  return detail::Buchberger(ring).run(gens);
}

// Ideal handle: generator list plus lazily computed, cached reduced
// Groebner basis. Immutable after construction; the cache is filled once.
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) require_same_ring(ring_, g.ring());
    homogeneous_ = std::all_of(gens_.begin(), gens_.end(),
                               [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

  static Ideal unit(RingPtr ring) {
    auto one = Polynomial::one(ring);
    return Ideal(std::move(ring), {std::move(one)});
  }

  static Ideal maximal(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      vars.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(vars));
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const { return homogeneous_; }

  // The cache is filled exactly once; afterwards the handle is immutable
  // and safe to share read-only across threads. Copies share the cache.
  const std::vector<Polynomial>& groebner() const& {
    std::call_once(cache_->once, [this] {
      cache_->basis = groebner_basis(ring_, gens_);
    });
    return cache_->basis;
  }

  // value overload so iterating the basis of a temporary handle is safe
  std::vector<Polynomial> groebner() const&& { return groebner(); }

  // Construct with a known reduced Groebner basis (skips recomputation).
  static Ideal with_basis(RingPtr ring, std::vector<Polynomial> basis) {
    Ideal i(std::move(ring), std::move(basis));
    std::call_once(i.cache_->once, [&i] { i.cache_->basis = i.gens_; });
    return i;
  }

  bool is_zero() const { return groebner().empty(); }

  bool is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb[0].is_constant();
  }

  bool contains(const Polynomial& f) const {
    require_same_ring(ring_, f.ring());
    return normal_form(f, groebner()).is_zero();
  }

  bool contains(const Ideal& sub) const {
    require_same_ring(ring_, sub.ring_);
    for (const auto& g : sub.groebner())
      if (!contains(g)) return false;
    return true;
  }

  bool equals(const Ideal& other) const {
    const auto& a = groebner();
    const auto& b = other.groebner();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return false;
    return true;
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  bool homogeneous_ = true;
};

inline bool ideal_membership(const Polynomial& f, const Ideal& I) {
  return I.contains(f);
}

namespace detail {

inline void append_unique(std::vector<Polynomial>& list, Polynomial p) {
  if (p.is_zero()) return;
  for (const auto& q : list)
    if (q == p) return;
  list.push_back(std::move(p));
}

inline void check_homogeneous_result(const Ideal& a, const Ideal& b,
                                     const Ideal& result) {
  if (a.is_homogeneous() && b.is_homogeneous() && !result.is_homogeneous())
    throw InternalError("homogeneous inputs produced a non-homogeneous ideal");
}

// Remaps a polynomial between rings. var_to_target[i] gives the target
// index of source variable i, or -1 when the variable must not occur.
inline Polynomial remap(const Polynomial& p, const RingPtr& target,
                        const std::vector<int>& var_to_target) {
  std::vector<Term> terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    std::vector<int> exp(target->nvars(), 0);
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      int e = t.mono.exponent(i);
      if (e == 0) continue;
      if (var_to_target[i] < 0)
        throw InternalError("remap hit a dropped variable");
      exp[static_cast<std::size_t>(var_to_target[i])] = e;
    }
    terms.push_back({Monomial(std::move(exp)), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace detail

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) detail::append_unique(gens, g);
  for (const auto& g : b.generators()) detail::append_unique(gens, g);
  Ideal out(a.ring(), std::move(gens));
  detail::check_homogeneous_result(a, b, out);
  return out;
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators())
      detail::append_unique(gens, f * g);
  Ideal out(a.ring(), std::move(gens));
  detail::check_homogeneous_result(a, b, out);
  return out;
}

// I^n; a non-positive power is the unit ideal by convention.
inline Ideal ideal_power(const Ideal& I, int n) {
  if (n <= 0) return Ideal::unit(I.ring());
  Ideal acc = I;
  for (int k = 1; k < n; ++k) acc = ideal_product(acc, I);
  return acc;
}

// Ideal generated by the i-th powers of the given fixed generators.
inline Ideal bracket_power(const RingPtr& ring,
                           const std::vector<Polynomial>& gens, int i) {
  if (i <= 0) return Ideal::unit(ring);
  std::vector<Polynomial> out;
  for (const auto& g : gens) detail::append_unique(out, g.pow(i));
  return Ideal(ring, std::move(out));
}

// Generators of I with the variables at `drop_indices` eliminated; the
// result lives in the ring on the remaining variables. The computation
// permutes the dropped variables to the front and uses a block order.
inline Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_indices) {
  const RingPtr& ring = I.ring();
  std::size_t n = ring->nvars();
  std::vector<bool> dropped(n, false);
  for (auto d : drop_indices) dropped[d] = true;
  std::size_t k = drop_indices.size();

  std::vector<std::string> work_vars, kept_vars;
  std::vector<int> to_work(n, -1);
  std::size_t di = 0, ki = k;
  for (std::size_t i = 0; i < n; ++i) {
    if (dropped[i]) {
      to_work[i] = static_cast<int>(di++);
      work_vars.push_back(ring->vars[i]);
    } else {
      to_work[i] = static_cast<int>(ki++);
      kept_vars.push_back(ring->vars[i]);
    }
  }
  // dropped block first, then the kept block in original relative order
  std::vector<std::string> ordered = work_vars;
  ordered.insert(ordered.end(), kept_vars.begin(), kept_vars.end());
  RingPtr work = make_ring(ring->field, std::move(ordered),
                           MonomialOrder::elim_block(k, ring->order.kind()));
  RingPtr rest = make_ring(ring->field, kept_vars, ring->order);

  std::vector<Polynomial> lifted;
  for (const auto& g : I.generators())
    lifted.push_back(detail::remap(g, work, to_work));
  auto gb = groebner_basis(work, lifted);

  std::vector<int> to_rest(work->nvars(), -1);
  for (std::size_t i = k; i < work->nvars(); ++i)
    to_rest[i] = static_cast<int>(i - k);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool free_of_block = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < k && free_of_block; ++i)
        if (t.mono.exponent(i) > 0) free_of_block = false;
    if (free_of_block) kept.push_back(detail::remap(g, rest, to_rest));
  }
  // the block-free members of the reduced basis are themselves the reduced
  // basis of the elimination ideal under the induced order
  return Ideal::with_basis(rest, std::move(kept));
}

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);

  RingPtr ext = extend_ring_front(ring, 1);
  std::vector<int> to_ext(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) to_ext[i] = static_cast<int>(i + 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::one(ext) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : a.generators())
    detail::append_unique(gens, t * detail::remap(g, ext, to_ext));
  for (const auto& g : b.generators())
    detail::append_unique(gens, one_minus_t * detail::remap(g, ext, to_ext));
  auto gb = groebner_basis(ext, gens);

  std::vector<int> to_base(ext->nvars(), -1);
  for (std::size_t i = 1; i < ext->nvars(); ++i) to_base[i] = static_cast<int>(i - 1);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool tag_free = true;
    for (const auto& term : g.terms())
      if (term.mono.exponent(0) > 0) tag_free = false;
    if (tag_free) kept.push_back(detail::remap(g, ring, to_base));
  }
  Ideal out = Ideal::with_basis(ring, std::move(kept));
  for (const auto& g : out.groebner())
    if (!a.contains(g) || !b.contains(g))
      throw InternalError("intersection left its inputs");
  detail::check_homogeneous_result(a, b, out);
  return out;
}

// I : J, computed one generator of J at a time via intersection and exact
// division. The colon by the zero ideal is rejected.
inline Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> divisors;
  for (const auto& g : J.generators())
    if (!g.is_zero()) divisors.push_back(g);
  if (divisors.empty()) throw PreconditionError("colon by zero ideal");

  Ideal acc = Ideal::unit(I.ring());
  bool first = true;
  for (const auto& g : divisors) {
    Ideal meet = ideal_intersection(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> quots;
    for (const auto& f : meet.groebner())
      detail::append_unique(quots, exact_divide(f, g));
    Ideal colon_g(I.ring(), std::move(quots));
    acc = first ? colon_g : ideal_intersection(acc, colon_g);
    first = false;
  }
  for (const auto& q : acc.groebner())
    for (const auto& g : divisors)
      if (!I.contains(q * g))
        throw InternalError("colon ideal violates (I : J) * J <= I");
  detail::check_homogeneous_result(I, J, acc);
  return acc;
}

}  // namespace corecalc

#endif  // CORECALC_GROEBNER_HPP
