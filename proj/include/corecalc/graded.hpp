#ifndef CORECALC_GRADED_HPP
#define CORECALC_GRADED_HPP

#include <vector>

#include "corecalc/hilbert.hpp"
#include "corecalc/linalg.hpp"

namespace corecalc {

// Number of monomials of the given degree, i.e. dim_k [S]_deg.
inline long long full_piece_dim(const RingPtr& ring, int deg) {
  if (deg < 0) return 0;
  long long b = 1;
  long long n = static_cast<long long>(ring->nvars());
  for (long long k = 1; k <= n - 1; ++k) b = b * (deg + k) / k;
  return n == 0 ? (deg == 0 ? 1 : 0) : b;
}

// dim_k [I]_deg for a homogeneous ideal.
inline long long ideal_piece_dim(const Ideal& I, int deg) {
  return full_piece_dim(I.ring(), deg) - hilbert_function(I, deg);
}

// Spanning set of [I]_deg: all monomial multiples of the reduced basis
// landing in the degree.
inline std::vector<Polynomial> ideal_piece_span(const Ideal& I, int deg) {
  std::vector<Polynomial> span;
  for (const auto& g : I.groebner()) {
    int gap = deg - g.degree();
    if (gap < 0) continue;
    for (const auto& u : monomials_of_degree(I.ring(), gap))
      span.push_back(g.times_term(FieldScalar::one(I.ring()->field), u));
  }
  return span;
}

// [A]_deg a subspace of [B]_deg, decided by reduction of a spanning set.
inline bool piece_contained(const Ideal& A, const Ideal& B, int deg) {
  const auto& gb = B.groebner();
  for (const auto& f : ideal_piece_span(A, deg))
    if (!normal_form(f, gb).is_zero()) return false;
  return true;
}

inline bool piece_equal(const Ideal& A, const Ideal& B, int deg) {
  return ideal_piece_dim(A, deg) == ideal_piece_dim(B, deg) &&
         piece_contained(A, B, deg);
}

// Coordinate vector of f over the monomial basis of its degree (columns
// sorted descending by the ring order, the convention everywhere here).
inline std::vector<FieldScalar> coordinates(const Polynomial& f,
                                            const std::vector<Monomial>& basis) {
  const Field& field = f.ring()->field;
  std::vector<FieldScalar> v(basis.size(), FieldScalar::zero(field));
  // terms and basis are both sorted descending; merge-scan
  std::size_t i = 0;
  for (const auto& t : f.terms()) {
    while (i < basis.size() && basis[i] != t.mono) ++i;
    if (i == basis.size()) throw InternalError("monomial outside coordinate basis");
    v[i] = t.coeff;
  }
  return v;
}

struct GradedPiece {
  std::vector<Polynomial> ideal_basis;     // echelon basis of [I]_deg
  std::vector<Monomial> quotient_basis;    // standard monomials of [S/I]_deg
};

// Echelon basis of [I]_deg together with the standard monomials spanning
// [S/I]_deg.
inline GradedPiece graded_piece_basis(const Ideal& I, int deg) {
  if (!I.is_homogeneous())
    throw PreconditionError("graded piece of a non-homogeneous ideal");
  if (deg < 0) throw PreconditionError("negative degree");
  GradedPiece out;
  out.quotient_basis = standard_monomials(I, deg);
  auto monos = monomials_of_degree(I.ring(), deg);
  Matrix m(0, monos.size(), I.ring()->field);
  for (const auto& f : ideal_piece_span(I, deg))
    m.append_row(coordinates(f, monos));
  auto pivots = m.rref();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!m.at(r, c).is_zero()) terms.push_back({monos[c], m.at(r, c)});
    out.ideal_basis.push_back(Polynomial::from_terms(I.ring(), std::move(terms)));
  }
  return out;
}

// Maximal independent subset of the residues of `polys` modulo the
// reduced basis `gb`, tracked by incremental elimination over `monos`.
inline std::vector<Polynomial> span_basis_mod(
    const std::vector<Polynomial>& polys, const std::vector<Polynomial>& gb,
    const std::vector<Monomial>& monos) {
  std::vector<std::vector<FieldScalar>> rows;
  std::vector<std::size_t> pivots;
  std::vector<Polynomial> basis;
  for (const auto& p : polys) {
    Polynomial r = normal_form(p, gb);
    if (r.is_zero()) continue;
    auto v = coordinates(r, monos);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v[pivots[i]].is_zero()) continue;
      FieldScalar factor = v[pivots[i]];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * rows[i][c];
    }
    std::size_t lead = v.size();
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) {
        lead = c;
        break;
      }
    if (lead == v.size()) continue;
    FieldScalar inv = v[lead].inverse();
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(lead);
    basis.push_back(std::move(r));
  }
  return basis;
}

}  // namespace corecalc

#endif  // CORECALC_GRADED_HPP
