#include "doctest.h"
#include "helpers.hpp"
#include "linklab/io.hpp"
#include "linklab/scalar.hpp"

using namespace linklab;

TEST_CASE("rationals live in lowest terms with positive denominator") {
  Scalar a = Scalar::rational(mpq_class(2, 4));
  CHECK(a == Scalar::rational(mpq_class(1, 2)));
  CHECK(a.rat().get_num() == 1);
  CHECK(a.rat().get_den() == 2);

  Scalar b = Scalar::rational(mpq_class(3, -6));
  CHECK(b.sign() == -1);
  CHECK(b.rat().get_den() == 2);
  CHECK(b.str() == "-1/2");
}

TEST_CASE("residues reduce into [0, p)") {
  FieldSpec f7{7};
  CHECK(Scalar::integer(-3, f7) == Scalar::residue(4, 7));
  CHECK(Scalar::integer(10, f7) == Scalar::residue(3, 7));
  CHECK(Scalar::integer(7, f7).is_zero());
  CHECK(Scalar::residue(6, 7).sign() == 1);
}

TEST_CASE("prime detection used by field validation") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(7));
  CHECK(is_prime_u32(2147483647u));
  CHECK_FALSE(is_prime_u32(1));
  CHECK_FALSE(is_prime_u32(4));
  CHECK_FALSE(is_prime_u32(1000000));
}

TEST_CASE("mixed-field arithmetic is rejected") {
  CHECK_THROWS_AS(Scalar::one({}) + Scalar::one({7}), StructuralError);
}

static Scalar random_scalar(testgen::Rng& rng, FieldSpec f) {
  if (f.rational()) {
    long num = static_cast<long>(rng.below(41)) - 20;
    long den = 1 + static_cast<long>(rng.below(9));
    return Scalar::rational(mpq_class(num, den));
  }
  return Scalar::residue(rng.below(f.p), f.p);
}

TEST_CASE("field axioms hold exactly over QQ and FF(7)") {
  for (FieldSpec f : {FieldSpec{}, FieldSpec{7}}) {
    testgen::Rng rng(f.p + 11);
    for (int trial = 0; trial < 200; ++trial) {
      Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar::zero(f));
      CHECK(a * Scalar::one(f) == a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar::one(f));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("scalar text round-trips through the polynomial parser") {
  RingPtr ring = PolyRing::make({"x"});
  testgen::Rng rng(271828);
  for (int trial = 0; trial < 100; ++trial) {
    Scalar s = random_scalar(rng, {});
    Polynomial f = Polynomial::constant(ring, s);
    CHECK(parse_polynomial(ring, to_string(f)) == f);
  }
}

TEST_CASE("cmp is a total order consistent with equality") {
  testgen::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Scalar a = random_scalar(rng, {}), b = random_scalar(rng, {});
    CHECK((a.cmp(b) == 0) == (a == b));
    CHECK(a.cmp(b) == -b.cmp(a));
  }
}
