#ifndef CORECALC_CORECALC_HPP
#define CORECALC_CORECALC_HPP

#include "corecalc/canonical.hpp"
#include "corecalc/core.hpp"
#include "corecalc/errors.hpp"
#include "corecalc/field.hpp"
#include "corecalc/graded.hpp"
#include "corecalc/groebner.hpp"
#include "corecalc/hilbert.hpp"
#include "corecalc/io.hpp"
#include "corecalc/linalg.hpp"
#include "corecalc/monomial.hpp"
#include "corecalc/parse.hpp"
#include "corecalc/points.hpp"
#include "corecalc/polynomial.hpp"
#include "corecalc/ring.hpp"
#include "corecalc/rng.hpp"
#include "corecalc/verifiers.hpp"
#include "corecalc/verify.hpp"

#endif  // CORECALC_CORECALC_HPP
