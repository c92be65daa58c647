#include <doctest.h>

#include "corecalc/core.hpp"
#include "test_util.hpp"

using namespace corecalc;

TEST_CASE("core formula golden examples") {
  Rng rng(41);

  // k[x,y]: m is generated by a regular sequence, so core(m) = m
  auto r2 = tu::ring_fp({"x", "y"});
  auto c = core_formula(Ideal::zero(r2), 1, rng);
  CHECK(c.core.equals(Ideal::maximal(r2)));

  // k[x]: core(m^2) = (x^2)
  auto r1 = tu::ring_fp({"x"});
  auto c2 = core_formula(Ideal::zero(r1), 2, rng);
  CHECK(c2.core.equals(tu::ideal(r1, {"x^2"})));

  CHECK_THROWS_AS(core_formula(Ideal::zero(r1), 0, rng), PreconditionError);
}

TEST_CASE("four-point core equals m^3 + (x0^2) over both fields") {
  for (auto r : {tu::ring_fp({"x0", "x1", "x2"}), tu::ring_qq({"x0", "x1", "x2"})}) {
    Rng rng(42);
    auto I = tu::four_point_ideal(r);
    auto c = core_formula(I, 1, rng);
    Ideal expected = ideal_sum(
        ideal_sum(ideal_power(Ideal::maximal(r), 3), tu::ideal(r, {"x0^2"})), I);
    CHECK(c.core.equals(expected));
  }
}

TEST_CASE("core is independent of the seed") {
  auto r = tu::ring_fp({"x0", "x1", "x2"});
  auto I = tu::four_point_ideal(r);
  Rng rng1(1), rng2(99);
  auto c1 = core_formula(I, 1, rng1);
  auto c2 = core_formula(I, 1, rng2);
  CHECK(c1.core.equals(c2.core));
}

TEST_CASE("oracle stabilizes and agrees with the formula") {
  Rng rng(43);

  auto r2 = tu::ring_fp({"x", "y"});
  auto o = core_oracle(Ideal::zero(r2), 1, rng);
  CHECK(!o.inconclusive);
  CHECK(o.core.equals(Ideal::maximal(r2)));

  auto r = tu::ring_fp({"x0", "x1", "x2"});
  auto I = tu::four_point_ideal(r);
  auto both = core_both(I, 1, rng);
  CHECK(!both.inconclusive);
  REQUIRE(both.agreement.has_value());
  CHECK(*both.agreement);
  Ideal expected = ideal_sum(
      ideal_sum(ideal_power(Ideal::maximal(r), 3), tu::ideal(r, {"x0^2"})), I);
  CHECK(both.core.equals(expected));
}

TEST_CASE("formula result lies in independently sampled parameter ideals") {
  auto r = tu::ring_fp({"x0", "x1", "x2"});
  auto I = tu::four_point_ideal(r);
  Rng rng(44);
  auto c = core_formula(I, 1, rng);
  int d = 1;
  Rng sampler(4404);
  int tried = 0;
  for (int round = 0; round < 50; ++round) {
    Rng rr = sampler.derive(static_cast<std::uint64_t>(round));
    std::vector<Polynomial> forms;
    for (int k = 0; k < d; ++k) forms.push_back(random_form(r, 1, rr));
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), forms.begin(), forms.end());
    if (!is_zero_dimensional(Ideal(r, gens))) continue;
    ++tried;
    Ideal param = ideal_sum(Ideal(r, forms), I);
    CHECK(param.contains(c.core));
  }
  CHECK(tried >= 45);
}

TEST_CASE("m-primary oracle") {
  Rng rng(45);
  auto r2 = tu::ring_fp({"x", "y"});
  auto S = Ideal::zero(r2);

  auto q1 = core_mprimary_oracle(S, Ideal::maximal(r2), rng);
  CHECK(!q1.inconclusive);
  CHECK(q1.core.equals(Ideal::maximal(r2)));

  // core(m^2) computed by the power formula must sit inside the stabilized
  // intersection for Q = m^2
  auto q2 = core_mprimary_oracle(S, ideal_power(Ideal::maximal(r2), 2), rng);
  CHECK(!q2.inconclusive);
  auto c2 = core_formula(S, 2, rng);
  CHECK(q2.core.contains(c2.core));

  CHECK_THROWS_AS(core_mprimary_oracle(S, tu::ideal(r2, {"x"}), rng),
                  PreconditionError);
}

TEST_CASE("core structure: level ring has expected-power core") {
  auto r = tu::ring_fp({"x", "y", "z"});
  Rng rng(46);
  auto ctx = make_context(tu::ideal(r, {"x^2-y*z", "y^2-x*z"}), rng);
  auto v = verify_core_structure(ctx, 1, rng);
  CHECK(v.sandwich);
  CHECK(v.reconstruction);
  CHECK(v.faithful);
  CHECK(v.expected_power_all_n);
  CHECK(v.one_degree_large_n);
  CHECK(v.three_way_agreement);
}

TEST_CASE("core structure: four points fail all three conditions coherently") {
  auto r = tu::ring_fp({"x0", "x1", "x2"});
  Rng rng(47);
  auto ctx = make_context(tu::four_point_ideal(r), rng, true);
  auto v = verify_core_structure(ctx, 1, rng);
  CHECK(v.sandwich);
  CHECK(v.reconstruction);
  CHECK(!v.faithful);
  CHECK(!v.expected_power_all_n);
  CHECK(!v.one_degree_large_n);
  CHECK(v.three_way_agreement);
  REQUIRE(v.n1_equivalence.has_value());
  CHECK(*v.n1_equivalence);
}

TEST_CASE("local containment on the collinear split") {
  auto r = tu::ring_fp({"x0", "x1", "x2"});
  Rng rng(48);
  auto I = tu::four_point_ideal(r);
  // f = x0 vanishes on the three collinear points; H is the ideal of the
  // remaining point (1:0:1); e = 1 and x0 * m <= core X
  Ideal L = tu::ideal(r, {"x0"});
  Ideal H = tu::ideal(r, {"x1", "x0-x2"});
  auto v = verify_local_containment(I, L, H, Ideal::maximal(r), rng, 1);
  CHECK(v.applicable);
  CHECK(v.e == 1);
  CHECK(v.pass);

  // the containment is sharp enough to force x0^2 into the core
  auto c = core_formula(I, 1, rng);
  CHECK(c.core.contains(tu::p(r, "x0^2")));

  // swapped pairing violates L H = 0 and must be rejected
  Ideal H_wrong = tu::ideal(r, {"x0", "x1*(x1-x2)*(x1+x2)"});
  CHECK_THROWS_AS(verify_local_containment(I, L, H_wrong, Ideal::maximal(r), rng, 1),
                  PreconditionError);
}

TEST_CASE("local containment with H = 0 and L = 0 is trivial") {
  auto r = tu::ring_fp({"x", "y"});
  Rng rng(49);
  auto v = verify_local_containment(Ideal::zero(r), Ideal::zero(r),
                                    Ideal::zero(r), Ideal::maximal(r), rng, 1);
  CHECK(v.applicable);
  CHECK(v.pass);
}

TEST_CASE("local containment for a general m-primary Q") {
  auto r = tu::ring_fp({"x0", "x1", "x2"});
  Rng rng(50);
  auto I = tu::four_point_ideal(r);
  Ideal L = tu::ideal(r, {"x0"});
  Ideal H = tu::ideal(r, {"x1", "x0-x2"});
  Ideal Q = ideal_power(Ideal::maximal(r), 2);
  auto v = verify_local_containment(I, L, H, Q, rng);
  CHECK(v.applicable);
  if (!v.inconclusive) CHECK(v.pass);
}
