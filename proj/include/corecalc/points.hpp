#ifndef CORECALC_POINTS_HPP
#define CORECALC_POINTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "corecalc/core.hpp"

namespace corecalc {

// Reduced points in projective n-space with exact coordinates, normalized
// so the last nonzero coordinate is 1. Carries lazily computed caches for
// the vanishing ideal and the per-point separator data.
class PointSet {
 public:
  PointSet(RingPtr ring, std::vector<std::vector<FieldScalar>> coords)
      : ring_(std::move(ring)) {
    for (auto& pt : coords) {
      if (pt.size() != ring_->nvars())
        throw PreconditionError("point coordinate length mismatch");
      normalize(pt);
      points_.push_back(std::move(pt));
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw PreconditionError("duplicate projective points");
    if (points_.empty()) throw PreconditionError("empty point set");
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<FieldScalar>>& points() const { return points_; }

  // n of P^n.
  std::size_t ambient_dim() const { return ring_->nvars() - 1; }

  PointSet without(std::size_t index) const {
    std::vector<std::vector<FieldScalar>> rest;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (i != index) rest.push_back(points_[i]);
    return PointSet(ring_, std::move(rest));
  }

  PointSet subset(const std::vector<std::size_t>& indices) const {
    std::vector<std::vector<FieldScalar>> sel;
    for (auto i : indices) sel.push_back(points_.at(i));
    return PointSet(ring_, std::move(sel));
  }

  // Ideal of one point: n independent linear forms x_i - c_i * x_pivot.
  Ideal point_ideal(std::size_t index) const {
    const auto& pt = points_[index];
    std::size_t pivot = ring_->nvars() - 1;
    while (pt[pivot].is_zero()) --pivot;
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (i == pivot) continue;
      gens.push_back(Polynomial::variable(ring_, i) -
                     Polynomial::variable(ring_, pivot).scaled(pt[i]));
    }
    return Ideal(ring_, std::move(gens));
  }

  const Ideal& vanishing_ideal() const {
    if (!ideal_) {
      Ideal acc = point_ideal(0);
      for (std::size_t i = 1; i < points_.size(); ++i)
        acc = ideal_intersection(acc, point_ideal(i));
      // sanity: the Hilbert function stabilizes at s and every point
      // satisfies every generator
      for (const auto& g : acc.groebner())
        for (const auto& pt : points_)
          if (!g.evaluate(pt).is_zero())
            throw InternalError("vanishing ideal misses a point");
      if (hilbert_function(acc, static_cast<int>(points_.size())) !=
          static_cast<long long>(points_.size()))
        throw InternalError("Hilbert function does not stabilize at s");
      ideal_ = std::move(acc);
    }
    return *ideal_;
  }

  // Least degree of a separator of point i: the first degree where
  // deleting the point drops the Hilbert function.
  const std::vector<int>& separator_degrees() const {
    if (!sep_degrees_) {
      std::vector<int> degs;
      const Ideal& IX = vanishing_ideal();
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_.size() == 1) {
          degs.push_back(0);  // the constant 1 separates a single point
          continue;
        }
        Ideal IY = without(i).vanishing_ideal();
        int found = -1;
        for (int deg = 0; found < 0; ++deg) {
          long long diff = hilbert_function(IX, deg) - hilbert_function(IY, deg);
          if (diff == 1) found = deg;
          if (deg > static_cast<int>(points_.size()) + 2)
            throw InternalError("separator degree exceeded s + 2");
        }
        degs.push_back(found);
      }
      sep_degrees_ = std::move(degs);
    }
    return *sep_degrees_;
  }

  // Minimal separators: f_i(P_j) = delta_ij, deg f_i minimal. Any solution
  // of the evaluation system is taken; only the generated ideal is
  // canonical. Solutions are evaluation-verified.
  const std::vector<Polynomial>& minimal_separators() const {
    if (!separators_) separators_ = solve_separators(0);
    return *separators_;
  }

  // A second, randomized choice of separators (particular + kernel
  // element); used to confirm the conductor does not depend on the choice.
  std::vector<Polynomial> alternate_separators(Rng& rng) const {
    return solve_separators(&rng);
  }

 private:
  static void normalize(std::vector<FieldScalar>& pt) {
    std::size_t last = pt.size();
    for (std::size_t i = pt.size(); i-- > 0;)
      if (!pt[i].is_zero()) {
        last = i;
        break;
      }
    if (last == pt.size())
      throw PreconditionError("zero vector is not a projective point");
    FieldScalar inv = pt[last].inverse();
    for (auto& c : pt) c = c * inv;
  }

  std::vector<Polynomial> solve_separators(Rng* rng) const {
    std::vector<Polynomial> fs;
    const auto& degs = separator_degrees();
    const Field& field = ring_->field;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto monos = monomials_of_degree(ring_, degs[i]);
      Matrix m(points_.size(), monos.size(), field);
      std::vector<FieldScalar> rhs(points_.size(), FieldScalar::zero(field));
      rhs[i] = FieldScalar::one(field);
      for (std::size_t p = 0; p < points_.size(); ++p)
        for (std::size_t c = 0; c < monos.size(); ++c)
          m.at(p, c) = Polynomial::one(ring_)
                           .times_term(FieldScalar::one(field), monos[c])
                           .evaluate(points_[p]);
      auto sol = m.solve(rhs);
      if (!sol)
        throw InternalError("separator system unsolvable at the minimal degree");
      if (rng) {
        auto kernel = m.kernel_basis();
        for (const auto& k : kernel) {
          FieldScalar c = random_scalar(field, *rng);
          for (std::size_t idx = 0; idx < sol->size(); ++idx)
            (*sol)[idx] += c * k[idx];
        }
      }
      std::vector<Term> terms;
      for (std::size_t c = 0; c < monos.size(); ++c)
        if (!(*sol)[c].is_zero()) terms.push_back({monos[c], (*sol)[c]});
      Polynomial f = Polynomial::from_terms(ring_, std::move(terms));
      for (std::size_t p = 0; p < points_.size(); ++p) {
        FieldScalar want = p == i ? FieldScalar::one(field) : FieldScalar::zero(field);
        if (f.evaluate(points_[p]) != want)
          throw InternalError("separator failed evaluation check");
      }
      fs.push_back(std::move(f));
    }
    return fs;
  }

  RingPtr ring_;
  std::vector<std::vector<FieldScalar>> points_;
  mutable std::optional<Ideal> ideal_;
  mutable std::optional<std::vector<int>> sep_degrees_;
  mutable std::optional<std::vector<Polynomial>> separators_;
};

// Conductor of the coordinate ring inside its integral closure: the
// S-ideal I_X + (f_1, ..., f_s). Checks m^{a+1} <= C and independence of
// the separator choice.
inline Ideal conductor(const PointSet& X, Rng& rng) {
  const Ideal& I = X.vanishing_ideal();
  std::vector<Polynomial> gens = I.generators();
  for (const auto& f : X.minimal_separators()) gens.push_back(f);
  Ideal C(X.ring(), std::move(gens));

  int a = hilbert_series(I).a_invariant_cm();
  Ideal ma1 = ideal_sum(ideal_power(Ideal::maximal(X.ring()), a + 1), I);
  if (!C.contains(ma1))
    throw InternalError("conductor does not contain m^{a+1}");

  std::vector<Polynomial> gens2 = I.generators();
  for (const auto& f : X.alternate_separators(rng)) gens2.push_back(f);
  Ideal C2(X.ring(), std::move(gens2));
  if (!C.equals(C2))
    throw InternalError("conductor depends on the separator choice");
  return C;
}

// core X three ways: m*C, the colon formula, and the intersection oracle;
// their pairwise agreement is the central cross-validation of the build.
inline CoreResult core_of_points(const PointSet& X, Rng& rng,
                                 OraclePolicy policy = {}) {
  const Ideal& I = X.vanishing_ideal();
  Ideal m = Ideal::maximal(X.ring());
  Ideal C = conductor(X, rng);
  Ideal via_conductor = ideal_sum(ideal_product(m, C), I);

  CoreResult formula = core_formula(I, 1, rng);
  if (!formula.core.equals(via_conductor))
    throw InternalError("core formula disagrees with m * conductor");

  CoreResult oracle = core_oracle(I, 1, rng, policy);
  if (!oracle.inconclusive && !oracle.core.equals(via_conductor))
    throw InternalError("core oracle disagrees with m * conductor");

  // y * C = m * C for the generic linear parameter y
  Ideal yC = ideal_sum(ideal_product(Ideal(X.ring(), formula.sop), C), I);
  if (!yC.equals(via_conductor))
    throw InternalError("y * conductor differs from m * conductor");

  CoreResult out;
  out.core = via_conductor;
  out.method = CoreMethod::both;
  out.n = 1;
  out.sop = formula.sop;
  out.inconclusive = oracle.inconclusive;
  out.agreement = !oracle.inconclusive;
  return out;
}

struct CBReport {
  bool is_cb = false;
  std::vector<int> separator_degrees;
  int a = 0;
  Ideal core;                    // core X as an S-ideal containing I_X
  bool core_is_power = false;    // core X = m^{a+2}
  std::vector<Polynomial> conductor_gens;
};

// Cayley-Bacharach classification, decided three independent ways: the
// deleted-point Hilbert functions, the separator degrees, and the shape of
// the core; the three verdicts must agree.
inline CBReport cayley_bacharach(const PointSet& X, Rng& rng) {
  if (X.size() < 2)
    throw PreconditionError("Cayley-Bacharach needs at least two points");
  CBReport rep;
  const Ideal& I = X.vanishing_ideal();
  rep.a = hilbert_series(I).a_invariant_cm();

  // (1) definition: all deleted-point Hilbert functions agree
  bool def_cb = true;
  int span = static_cast<int>(X.size()) + 1;
  std::vector<long long> reference;
  for (std::size_t i = 0; i < X.size(); ++i) {
    Ideal IY = X.without(i).vanishing_ideal();
    std::vector<long long> hf;
    for (int deg = 0; deg <= span; ++deg) hf.push_back(hilbert_function(IY, deg));
    if (i == 0)
      reference = hf;
    else if (hf != reference)
      def_cb = false;
  }

  // (2) separator degrees all equal
  rep.separator_degrees = X.separator_degrees();
  bool sep_cb = true;
  for (int deg : rep.separator_degrees)
    if (deg != rep.separator_degrees[0]) sep_cb = false;

  // (3) core X = m^{a+2}
  CoreResult core = core_of_points(X, rng);
  rep.core = core.core;
  Ideal expected =
      ideal_sum(ideal_power(Ideal::maximal(X.ring()), rep.a + 2), I);
  rep.core_is_power = core.core.equals(expected);

  if (def_cb != sep_cb || def_cb != rep.core_is_power)
    throw InternalError("Cayley-Bacharach verdicts disagree");
  rep.is_cb = def_cb;
  for (const auto& f : X.minimal_separators()) rep.conductor_gens.push_back(f);
  return rep;
}

struct YZVerdict {
  bool applicable = true;
  bool lower_e = false;       // m^{a+2} + f m^e <= m^{a+2} + f m^{a'+2}
  bool middle = false;        // m^{a+2} + f m^{a'+2} <= core X
  bool upper = false;         // core X <= m^{b+2}
  int a_prime = 0;
  long long e = 0;
  std::string note;
  bool pass() const { return lower_e && middle && upper; }
};

// The split-configuration containments for X = Y u Z with Y inside the
// hypersurface f = 0.
inline YZVerdict verify_yz(const PointSet& X, const std::vector<std::size_t>& z_indices,
                           const Polynomial& f, Rng& rng) {
  YZVerdict v;
  if (z_indices.empty()) {
    v.applicable = false;
    v.note = "Z is empty";
    return v;
  }
  std::vector<bool> in_z(X.size(), false);
  for (auto i : z_indices) in_z.at(i) = true;
  std::vector<std::size_t> y_indices;
  for (std::size_t i = 0; i < X.size(); ++i)
    if (!in_z[i]) y_indices.push_back(i);
  if (y_indices.empty()) {
    v.applicable = false;
    v.note = "Y is empty";
    return v;
  }
  for (auto i : y_indices)
    if (!f.evaluate(X.points()[i]).is_zero())
      throw PreconditionError("f does not vanish on Y");

  PointSet Z = X.subset(z_indices);
  v.e = static_cast<long long>(Z.size());
  v.a_prime = hilbert_series(Z.vanishing_ideal()).a_invariant_cm();

  const Ideal& I = X.vanishing_ideal();
  Rng local = rng.derive(4242);
  auto inv = invariants(I, local);
  Ideal m = Ideal::maximal(X.ring());
  Ideal core = core_of_points(X, local).core;

  Ideal fI(X.ring(), {f});
  Ideal lhs_e = ideal_sum(
      ideal_sum(ideal_power(m, inv.a + 2),
                ideal_product(fI, ideal_power(m, static_cast<int>(v.e)))),
      I);
  Ideal lhs_a = ideal_sum(
      ideal_sum(ideal_power(m, inv.a + 2),
                ideal_product(fI, ideal_power(m, v.a_prime + 2))),
      I);
  Ideal upper = ideal_sum(ideal_power(m, inv.b + 2), I);

  v.lower_e = lhs_a.contains(lhs_e);
  v.middle = core.contains(lhs_a);
  v.upper = upper.contains(core);
  return v;
}

// Random configuration helpers used by the suites and tests.
inline PointSet random_points(const RingPtr& ring, std::size_t count, Rng& rng) {
  std::vector<std::vector<FieldScalar>> pts;
  int guard = 0;
  while (pts.size() < count) {
    if (++guard > 1000) throw Error("could not sample distinct points");
    std::vector<FieldScalar> pt;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
      pt.push_back(random_scalar(ring->field, rng));
    bool zero = std::all_of(pt.begin(), pt.end(),
                            [](const FieldScalar& c) { return c.is_zero(); });
    if (zero) continue;
    try {
      auto probe = pts;
      probe.push_back(pt);
      PointSet test(ring, probe);
      pts = std::move(probe);
    } catch (const PreconditionError&) {
      // duplicate after normalization; resample
    }
  }
  return PointSet(ring, pts);
}

}  // namespace corecalc

#endif  // CORECALC_POINTS_HPP
