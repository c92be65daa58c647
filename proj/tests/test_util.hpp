#ifndef CORECALC_TEST_UTIL_HPP
#define CORECALC_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "corecalc/groebner.hpp"
#include "corecalc/parse.hpp"

namespace tu {

using namespace corecalc;

inline RingPtr ring_fp(std::vector<std::string> vars) {
  return make_ring(Field::prime_default(), std::move(vars));
}

inline RingPtr ring_qq(std::vector<std::string> vars) {
  return make_ring(Field::rationals(), std::move(vars));
}

inline Polynomial p(const RingPtr& r, const std::string& text) {
  return parse_polynomial(text, r);
}

inline Ideal ideal(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(p(r, g));
  return Ideal(r, std::move(ps));
}

// The worked four-point example: (0:-1:1), (0:0:1), (0:1:1), (1:0:1).
inline Ideal four_point_ideal(const RingPtr& r) {
  return ideal(r, {"x0*x1", "x0*(x0-x2)", "x1*(x1-x2)*(x1+x2)"});
}

}  // namespace tu

#endif
