#include "doctest.h"

#include "instanton/error.hpp"
#include "instanton/matrix.hpp"

using namespace instanton;

namespace {
const PrimeField F(FieldConfig::kDefaultPrime);
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(F, Matrix::identity(3)) == 3);
  CHECK(rank(F, Matrix(4, 7)) == 0);
  CHECK(rank(F, Matrix::from_ints(F, {{1, 2, 3}, {2, 4, 6}})) == 1);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(F, Matrix::identity(3)).empty());
  auto k = kernel_basis(F, Matrix::from_ints(F, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == 1);
  CHECK(k[0][1] == F.from_int(-1));
}

TEST_CASE("kernel of a random full-rank 5x8 matrix") {
  Rng rng(7);
  Matrix M = Matrix::random(F, rng, 5, 8);
  REQUIRE(rank(F, M) == 5);
  auto basis = kernel_basis(F, M);
  REQUIRE(basis.size() == 3);
  std::size_t last_lead = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto Mv = multiply(F, M, basis[i]);
    for (auto x : Mv) CHECK(x == 0);
    std::size_t lead = 0;
    while (basis[i][lead] == 0) ++lead;
    CHECK(basis[i][lead] == 1);
    if (i > 0) CHECK(lead > last_lead);
    last_lead = lead;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) CHECK(basis[j][lead] == 0);
  }
}

TEST_CASE("rank-nullity and transpose invariance on random matrices") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8), inner = 1 + rng.below(5);
    Matrix M = multiply(F, Matrix::random(F, rng, r, inner), Matrix::random(F, rng, inner, c));
    auto rk = rank(F, M);
    CHECK(rk == rank(F, M.transpose()));
    CHECK(rk <= inner);
    auto basis = kernel_basis(F, M);
    CHECK(rk + basis.size() == c);
    for (const auto& v : basis)
      for (auto x : multiply(F, M, v)) CHECK(x == 0);
  }
}

TEST_CASE("determinism") {
  Rng a(99), b(99);
  Matrix M1 = Matrix::random(F, a, 6, 9), M2 = Matrix::random(F, b, 6, 9);
  CHECK(M1 == M2);
  CHECK(kernel_basis(F, M1) == kernel_basis(F, M2));
}

TEST_CASE("inverse and determinant") {
  Rng rng(3);
  Matrix M = Matrix::random(F, rng, 5, 5);
  REQUIRE(determinant(F, M) != 0);
  CHECK(multiply(F, M, inverse(F, M)) == Matrix::identity(5));
  Matrix S = Matrix::from_ints(F, {{1, 2}, {2, 4}});
  CHECK(determinant(F, S) == 0);
  CHECK_THROWS_AS(inverse(F, S), Error);
  CHECK(determinant(F, Matrix::from_ints(F, {{0, 1}, {1, 0}})) == F.from_int(-1));
}

TEST_CASE("kronecker product mixes indices as documented") {
  Matrix A = Matrix::from_ints(F, {{1, 2}, {3, 4}});
  Matrix B = Matrix::from_ints(F, {{0, 5}, {6, 7}});
  Matrix K = kronecker(F, A, B);
  CHECK(K.rows() == 4);
  CHECK(K(1 * 2 + 1, 0 * 2 + 1) == F.mul(3, 7));
  CHECK(K(0 * 2 + 1, 1 * 2 + 0) == F.mul(2, 6));
}

TEST_CASE("deadline") {
  Deadline none;
  CHECK_FALSE(none.expired());
  Deadline gone(1e-9);
  while (!gone.expired()) {
  }
  CHECK_THROWS_AS(gone.check(), Error);
  CHECK_THROWS_AS(rank(F, Matrix::identity(4), &gone), Error);
}
