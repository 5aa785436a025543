#include "doctest.h"

#include "instanton/binary_forms.hpp"
#include "instanton/error.hpp"

using namespace instanton;

namespace {
const PrimeField F(FieldConfig::kDefaultPrime);

Matrix random_2x2(Rng& rng) { return Matrix::random(F, rng, 2, 2); }

Matrix commutator(const Matrix& a, const Matrix& b) { return sub(F, multiply(F, a, b), multiply(F, b, a)); }
}  // namespace

TEST_CASE("multiplication map shapes") {
  Matrix m0 = mult_map(0, 3);
  CHECK(m0 == Matrix::identity(4));
  Matrix m11 = mult_map(1, 1);
  CHECK(m11.rows() == 3);
  CHECK(m11.cols() == 4);
  CHECK(m11(0, 0) == 1);
  CHECK(m11(1, 1) == 1);
  CHECK(m11(1, 2) == 1);
  CHECK(m11(2, 3) == 1);
  for (std::size_t p = 0; p <= 6; ++p)
    for (std::size_t q = 0; q <= 6; ++q) CHECK(rank(F, mult_map(p, q)) == p + q + 1);
}

TEST_CASE("symmetric powers") {
  CHECK(sym_power(F, Matrix::identity(2), 4) == Matrix::identity(5));
  Matrix d = Matrix::from_ints(F, {{3, 0}, {0, 5}});
  Matrix s = sym_power(F, d, 3);
  for (std::size_t i = 0; i <= 3; ++i) CHECK(s(i, i) == F.mul(F.pow(3, 3 - i), F.pow(5, i)));
  Rng rng(1);
  for (int t = 0; t < 5; ++t) {
    Matrix g = random_2x2(rng), h = random_2x2(rng);
    for (std::size_t m : {1u, 2u, 5u}) {
      CHECK(sym_power(F, multiply(F, g, h), m) == multiply(F, sym_power(F, g, m), sym_power(F, h, m)));
    }
  }
}

TEST_CASE("derived action") {
  CHECK(sym_power_derivative(F, Matrix(2, 2), 3).is_zero());
  CHECK(sym_power_derivative(F, Matrix::identity(2), 4) == scale(F, 4, Matrix::identity(5)));
  Rng rng(2);
  for (int t = 0; t < 5; ++t) {
    Matrix a = random_2x2(rng), b = random_2x2(rng);
    for (std::size_t m : {1u, 3u, 6u}) {
      CHECK(sym_power_derivative(F, commutator(a, b), m) ==
            commutator(sym_power_derivative(F, a, m), sym_power_derivative(F, b, m)));
    }
  }
}

TEST_CASE("equivariance of multiplication") {
  Rng rng(3);
  for (std::size_t p = 0; p <= 6; ++p)
    for (std::size_t q = 0; q <= 6; ++q) {
      Matrix g = random_2x2(rng);
      Matrix lhs = multiply(F, sym_power(F, g, p + q), mult_map(p, q));
      Matrix rhs = multiply(F, mult_map(p, q), kronecker(F, sym_power(F, g, p), sym_power(F, g, q)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("hyperplane multiplication test") {
  Rng rng(4);
  for (int t = 0; t < 5; ++t) {
    Vector lambda{rng.nonzero(F), rng.scalar(F)};
    CHECK_FALSE(hyperplane_mult_surjective(F, lambda, 3));
  }
  for (std::size_t p = 1; p <= 5; ++p) {
    Vector lambda = power_functional(F, rng.scalar(F), rng.nonzero(F), p);
    CHECK_FALSE(hyperplane_mult_surjective(F, lambda, 2));
  }
  for (int t = 0; t < 5; ++t) {
    Vector lambda(4);
    for (auto& c : lambda) c = rng.scalar(F);
    CHECK(hyperplane_mult_surjective(F, lambda, 2));
  }
  try {
    hyperplane_mult_surjective(F, Vector(3, 0), 1);
    FAIL("expected ZeroFunctional");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroFunctional);
  }
}
