#ifndef CORECALC_MONOMIAL_HPP
#define CORECALC_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "corecalc/errors.hpp"

namespace corecalc {

// Exponent vector; the variable count is fixed by the ambient ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {}

  static Monomial variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exp_[index] = 1;
    return m;
  }

  std::size_t nvars() const { return exp_.size(); }
  int exponent(std::size_t i) const { return exp_[i]; }
  const std::vector<int>& exponents() const { return exp_; }

  int degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

  bool is_one() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    check_size(o);
    Monomial out(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      out.exp_[i] = exp_[i] + o.exp_[i];
      if (out.exp_[i] < 0) throw Error("monomial exponent overflow");
    }
    return out;
  }

  bool divides(const Monomial& o) const {
    check_size(o);
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  // Exact quotient o / *this is the caller's job to guarantee; this computes
  // *this / o.
  Monomial operator/(const Monomial& o) const {
    check_size(o);
    Monomial out(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) {
      out.exp_[i] = exp_[i] - o.exp_[i];
      if (out.exp_[i] < 0) throw Error("inexact monomial division");
    }
    return out;
  }

  Monomial lcm(const Monomial& o) const {
    check_size(o);
    Monomial out(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i)
      out.exp_[i] = std::max(exp_[i], o.exp_[i]);
    return out;
  }

  bool coprime(const Monomial& o) const {
    check_size(o);
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > 0 && o.exp_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

 private:
  void check_size(const Monomial& o) const {
    if (exp_.size() != o.exp_.size())
      throw PreconditionError("monomial length mismatch");
  }

  std::vector<int> exp_;
};

// Total multiplicative order on monomials. grevlex and lex are the public
// orders; elim(k) is the block order used internally for elimination: the
// first k variables are compared grevlex first, ties fall through to the
// tail order on the rest.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elim };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0, Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0, Kind::lex); }
  static MonomialOrder elim_block(std::size_t leading_vars,
                                  Kind tail = Kind::grevlex) {
    return MonomialOrder(Kind::elim, leading_vars, tail);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
      throw PreconditionError("monomial length mismatch");
    switch (kind_) {
      case Kind::lex:
        return lex_cmp(a, b, 0, a.nvars());
      case Kind::grevlex:
        return grevlex_cmp(a, b, 0, a.nvars());
      case Kind::elim: {
        auto head = grevlex_cmp(a, b, 0, block_);
        if (head != std::strong_ordering::equal) return head;
        if (tail_ == Kind::lex) return lex_cmp(a, b, block_, a.nvars());
        return grevlex_cmp(a, b, block_, a.nvars());
      }
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  MonomialOrder(Kind k, std::size_t block, Kind tail)
      : kind_(k), block_(block), tail_(tail) {}

  static std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b,
                                      std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (a.exponent(i) != b.exponent(i))
        return a.exponent(i) <=> b.exponent(i);
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b,
                                          std::size_t from, std::size_t to) {
    int da = 0, db = 0;
    for (std::size_t i = from; i < to; ++i) {
      da += a.exponent(i);
      db += b.exponent(i);
    }
    if (da != db) return da <=> db;
    // ties: last variable with differing exponent decides, smaller wins
    for (std::size_t i = to; i-- > from;) {
      if (a.exponent(i) != b.exponent(i))
        return b.exponent(i) <=> a.exponent(i);
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t block_;
  Kind tail_;
};

}  // namespace corecalc

#endif  // CORECALC_MONOMIAL_HPP
