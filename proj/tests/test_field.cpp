#include <doctest.h>

#include "corecalc/field.hpp"
#include "corecalc/rng.hpp"

using namespace corecalc;

namespace {

void field_axioms(const Field& f) {
  Rng rng(20240 + f.characteristic());
  for (int trial = 0; trial < 10000; ++trial) {
    auto a = FieldScalar::from_int(f, static_cast<long long>(rng.uniform(2001)) - 1000);
    auto b = FieldScalar::from_int(f, static_cast<long long>(rng.uniform(2001)) - 1000);
    auto c = FieldScalar::from_int(f, static_cast<long long>(rng.uniform(2001)) - 1000);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == FieldScalar::zero(f));
    if (!a.is_zero()) CHECK(a.inverse() * a == FieldScalar::one(f));
  }
}

}  // namespace

TEST_CASE("field axioms hold exactly over the rationals") {
  field_axioms(Field::rationals());
}

TEST_CASE("field axioms hold exactly over F_32003") {
  field_axioms(Field::prime_default());
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
  auto q = FieldScalar::rational(4, -6);
  CHECK(q.str() == "-2/3");
  CHECK(q * FieldScalar::rational(-3, 2) == FieldScalar::one(Field::rationals()));
  CHECK(FieldScalar::rational(0, -7).str() == "0");
}

TEST_CASE("modular values are canonical residues") {
  auto f = Field::prime_default();
  CHECK(FieldScalar::from_int(f, -1).str() == "32002");
  CHECK(FieldScalar::from_int(f, 32003).is_zero());
  CHECK(FieldScalar::from_int(f, 2).inverse() * FieldScalar::from_int(f, 2) ==
        FieldScalar::one(f));
}

TEST_CASE("prime validation rejects composites and huge moduli") {
  CHECK_THROWS_AS(Field::prime(32001), PreconditionError);  // 3 * 10667
  CHECK_THROWS_AS(Field::prime(1u << 31), PreconditionError);
  CHECK(Field::prime(2147483647).characteristic() == 2147483647u);  // Mersenne prime
}

TEST_CASE("mixed-field arithmetic is rejected") {
  auto a = FieldScalar::one(Field::rationals());
  auto b = FieldScalar::one(Field::prime_default());
  CHECK_THROWS_AS(a + b, PreconditionError);
  CHECK_THROWS_AS(a * b, PreconditionError);
}

TEST_CASE("field literals parse for both fields") {
  CHECK(parse_field_literal(Field::rationals(), "-3/6").str() == "-1/2");
  CHECK(parse_field_literal(Field::prime_default(), "-1").str() == "32002");
  CHECK(parse_field_literal(Field::prime_default(), "1/2") ==
        FieldScalar::from_int(Field::prime_default(), 2).inverse());
  CHECK_THROWS_AS(parse_field_literal(Field::rationals(), "x"), ParseError);
}

TEST_CASE("division by zero throws") {
  auto f = Field::rationals();
  CHECK_THROWS_AS(FieldScalar::zero(f).inverse(), Error);
  auto fp = Field::prime_default();
  CHECK_THROWS_AS(FieldScalar::zero(fp).inverse(), Error);
}

TEST_CASE("rng determinism and derivation") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng base(7);
  CHECK(base.derive(0).next() != base.derive(1).next());
}
