#ifndef CORECALC_POLYNOMIAL_HPP
#define CORECALC_POLYNOMIAL_HPP

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "corecalc/field.hpp"
#include "corecalc/monomial.hpp"
#include "corecalc/ring.hpp"

namespace corecalc {

// Degree of the zero polynomial.
constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

struct Term {
  Monomial mono;
  FieldScalar coeff;
};

// Multivariate polynomial: term list sorted strictly descending by the
// ring's monomial order, no zero coefficients, no duplicate monomials.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial constant(RingPtr ring, FieldScalar c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(ring->nvars()), std::move(c)});
    return p;
  }

  static Polynomial one(RingPtr ring) {
    auto f = ring->field;
    return constant(std::move(ring), FieldScalar::one(f));
  }

  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(ring->nvars(), index),
                        FieldScalar::one(ring->field)});
    return p;
  }

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw PreconditionError("leading term of zero");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const FieldScalar& leading_coeff() const { return leading_term().coeff; }

  int degree() const {
    if (terms_.empty()) return kDegreeOfZero;
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, -t.coeff});
    return out;
  }

  Polynomial operator+(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial out(ring_);
    merge_add(terms_, o.terms_, FieldScalar::one(ring_->field),
              Monomial(ring_->nvars()), out.terms_, ring_->order);
    return out;
  }

  Polynomial operator-(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial out(ring_);
    merge_add(terms_, o.terms_, -FieldScalar::one(ring_->field),
              Monomial(ring_->nvars()), out.terms_, ring_->order);
    return out;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial acc(ring_);
    // accumulate term-by-term merges; adequate at desk scale
    for (const auto& t : o.terms_) {
      Polynomial next(ring_);
      merge_add(acc.terms_, terms_, t.coeff, t.mono, next.terms_, ring_->order);
      acc = std::move(next);
    }
    return acc;
  }

  Polynomial scaled(const FieldScalar& c) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono, t.coeff * c});
    return out;
  }

  Polynomial times_term(const FieldScalar& c, const Monomial& m) const {
    Polynomial out(ring_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
    return out;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial power");
    Polynomial acc = one(ring_);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = (e >>= 1) > 0 ? base * base : base;
    }
    return acc;
  }

  // In-place f += c * m * g; the workhorse of polynomial reduction.
  void add_multiple(const FieldScalar& c, const Monomial& m, const Polynomial& g) {
    require_same_ring(ring_, g.ring_);
    if (c.is_zero() || g.is_zero()) return;
    std::vector<Term> out;
    merge_add(terms_, g.terms_, c, m, out, ring_->order);
    terms_ = std::move(out);
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().inverse());
  }

  FieldScalar evaluate(const std::vector<FieldScalar>& point) const {
    if (!ring_) throw PreconditionError("evaluate on default polynomial");
    if (point.size() != ring_->nvars())
      throw PreconditionError("evaluation point length mismatch");
    FieldScalar acc = FieldScalar::zero(ring_->field);
    for (const auto& t : terms_) {
      FieldScalar v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        for (int e = 0; e < t.mono.exponent(i); ++e) v = v * point[i];
      }
      acc += v;
    }
    return acc;
  }

  bool operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size())
      return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono ||
          terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;  // defined in parse.hpp

 private:
  void normalize() {
    auto& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.mono, b.mono);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff += t.coeff;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
  }

  // out = a + c * m * b, all term lists sorted descending.
  static void merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
                        const FieldScalar& c, const Monomial& m,
                        std::vector<Term>& out, const MonomialOrder& ord) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    bool scale_b = !c.is_zero();
    while (i < a.size() && j < b.size() && scale_b) {
      Monomial bm = b[j].mono * m;
      auto cmp = ord.compare(a[i].mono, bm);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(a[i++]);
      } else if (cmp == std::strong_ordering::less) {
        out.push_back({std::move(bm), b[j].coeff * c});
        ++j;
      } else {
        FieldScalar s = a[i].coeff + b[j].coeff * c;
        if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    if (scale_b)
      for (; j < b.size(); ++j) out.push_back({b[j].mono * m, b[j].coeff * c});
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace corecalc

#endif  // CORECALC_POLYNOMIAL_HPP
