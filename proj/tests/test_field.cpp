#include "doctest.h"

#include "instanton/error.hpp"
#include "instanton/field.hpp"

using namespace instanton;

TEST_CASE("prime field arithmetic") {
  PrimeField f(101);
  CHECK(f.add(100, 5) == 4);
  CHECK(f.sub(3, 5) == 99);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(50, 3) == 49);
  for (Scalar a = 1; a < 101; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 100);
  CHECK(f.to_signed(100) == -1);
  CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("large modulus multiplication does not overflow") {
  PrimeField f(FieldConfig::kDefaultPrime);
  Scalar a = f.from_int(-2);
  CHECK(f.mul(a, a) == 4);
  CHECK(f.pow(a, f.modulus() - 1) == 1);
}

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(PrimeField(100), Error);
  CHECK_THROWS_AS(PrimeField(2), Error);
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ull));
}

TEST_CASE("roots of unity have the requested order") {
  PrimeField f(FieldConfig::kDefaultPrime);
  for (std::uint32_t order : {2u, 3u, 6u, 7u}) {
    Scalar r = f.root_of_unity(order);
    CHECK(f.pow(r, order) == 1);
    for (std::uint32_t d = 1; d < order; ++d) CHECK(f.pow(r, d) != 1);
  }
  CHECK_THROWS_AS(f.root_of_unity(4), Error);  // 4 does not divide p-1 = 2 * 3^2 * 7 * 11 * 31 * 151 * 331
}

TEST_CASE("torsion primes") {
  for (std::uint32_t d : {1u, 2u, 4u, 5u, 8u, 12u}) {
    auto p = prime_with_torsion(d);
    CHECK(is_prime(p));
    CHECK((p - 1) % d == 0);
    auto q = prime_with_torsion(d, 1);
    CHECK(q < p);
    CHECK((q - 1) % d == 0);
  }
}

TEST_CASE("field config validation") {
  FieldConfig cfg;
  CHECK_NOTHROW(cfg.validate_for(5, 5));
  cfg.prime = 13;
  try {
    cfg.validate_for(1, 3);
    FAIL("expected FieldTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldTooSmall);
  }
}
