#include "doctest.h"

#include "instanton/error.hpp"
#include "instanton/monad.hpp"

using namespace instanton;

namespace {
const PrimeField F(FieldConfig::kDefaultPrime);

// (x0, x1 | y0, y1) on P^3, a symplectic 1 x 4 matrix.
LinearFormMatrix simple_row() {
  LinearFormMatrix A = LinearFormMatrix::zero(1, 1);
  A.coeffs[0](0, 0) = 1;
  A.coeffs[1](0, 1) = 1;
  A.coeffs[2](0, 2) = 1;
  A.coeffs[3](0, 3) = 1;
  return A;
}

LinearFormMatrix random_matrix(Rng& rng, std::size_t n, std::size_t k) {
  LinearFormMatrix A = LinearFormMatrix::zero(n, k);
  for (auto& m : A.coeffs) m = Matrix::random(F, rng, k, 2 * n + 2 * k);
  return A;
}
}  // namespace

TEST_CASE("symplectic form") {
  Matrix J = symplectic_J(F, 3);
  CHECK(multiply(F, J, J) == scale(F, F.neg(1), Matrix::identity(6)));
  CHECK(J.transpose() == scale(F, F.neg(1), J));
}

TEST_CASE("symplectic check") {
  auto A = simple_row();
  CHECK(symplectic_check(F, A));
  A.coeffs[2](0, 0) = 5;
  CHECK(symplectic_check(F, A));  // every 1 x 1 antisymmetric matrix is zero
  LinearFormMatrix B = LinearFormMatrix::zero(1, 2);
  CHECK(symplectic_check(F, B));
  B.coeffs[0](0, 0) = 1;
  B.coeffs[1](1, 3) = 1;
  CHECK_FALSE(symplectic_check(F, B));
}

TEST_CASE("A J A^t is antisymmetric for any matrix") {
  Rng rng(8);
  auto A = random_matrix(rng, 1, 2);
  Matrix J = symplectic_J(F, 3);
  for (std::size_t m = 0; m < A.nvars; ++m)
    for (std::size_t l = 0; l < A.nvars; ++l) {
      Matrix Kml = multiply(F, multiply(F, A.coeffs[m], J), A.coeffs[l].transpose());
      Matrix Klm = multiply(F, multiply(F, A.coeffs[l], J), A.coeffs[m].transpose());
      CHECK(Kml.transpose() == scale(F, F.neg(1), Klm));
    }
}

TEST_CASE("Kronecker coefficients") {
  auto A = simple_row();
  auto K = kronecker_coefficients(F, A);
  CHECK(K.size() == 6);
  for (const auto& e : K) {
    CHECK(e.K.rows() == 1);
    Matrix J = symplectic_J(F, 2);
    Matrix back = multiply(F, multiply(F, A.coeffs[e.l], J), A.coeffs[e.m].transpose());
    CHECK(back(0, 0) == F.neg(e.K(0, 0)));
  }
  // single row (x0, 0 | x1, 0): K_01 = A_0 J A_1^t = 1
  LinearFormMatrix B = LinearFormMatrix::zero(1, 1);
  B.coeffs[0](0, 0) = 1;
  B.coeffs[1](0, 2) = 1;
  auto KB = kronecker_coefficients(F, B);
  CHECK(KB[0].m == 0);
  CHECK(KB[0].l == 1);
  CHECK(KB[0].K(0, 0) == 1);
}

TEST_CASE("syzygies of the zero matrix") {
  for (std::size_t n : {1u, 2u})
    for (std::size_t k : {1u, 3u}) CHECK(syzygy_dim(F, LinearFormMatrix::zero(n, k), 0) == 2 * n + 2 * k);
}

TEST_CASE("syzygy basis vectors are relations") {
  auto A = simple_row();
  auto basis = syzygy_basis(F, A, 1);
  CHECK(basis.size() == syzygy_dim(F, A, 1));
  for (const auto& v : basis)
    for (const auto& q : apply(F, A, v)) CHECK(q.is_zero());
}

TEST_CASE("h0 of twists requires a verified presentation") {
  auto M = make_presentation(F, simple_row(), 50, 1);
  CHECK(M.symplectic_verified);
  CHECK(M.rank_evidence.mode == EvidenceMode::Sampled);
  CHECK(h0_twist(F, M, 0) == 0);
  CHECK(h0_twist(F, M, 1) == 5);  // 2n^2 + 3n with n = 1

  auto Z = make_presentation(F, LinearFormMatrix::zero(1, 1), 5, 1);
  CHECK(Z.rank_evidence.mode == EvidenceMode::Disproved);
  CHECK(Z.rank_evidence.min_rank == 0);
  CHECK(Z.rank_evidence.failing_point.has_value());
  CHECK_THROWS_AS(h0_twist(F, Z, 1), Error);
}

TEST_CASE("rank at points") {
  Vector e0{1, 0, 0, 0};
  CHECK(rank_at_point(F, LinearFormMatrix::zero(1, 2), e0) == 0);
  CHECK(rank_at_point(F, simple_row(), e0) == 1);
}

TEST_CASE("line pairing") {
  auto A = simple_row();
  Vector P{1, 0, 0, 0}, Q{0, 0, 1, 0};
  Matrix M = line_pairing(F, A, P, Q);
  CHECK(M(0, 0) == 1);
  try {
    line_pairing(F, A, P, Vector{3, 0, 0, 0});
    FAIL("expected DegenerateLine");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateLine);
  }
}

TEST_CASE("restricted sections and the rank-drop guard") {
  auto A = simple_row();
  Rng rng(12);
  auto L = SubspaceParam::random(F, rng, 4, 1);
  CHECK(h0_restricted(F, A, L) == 2);
  Matrix P(4, 2);
  P(1, 0) = 1;
  P(3, 1) = 1;
  LinearFormMatrix B = LinearFormMatrix::zero(1, 1);
  B.coeffs[0](0, 0) = 1;
  B.coeffs[2](0, 2) = 1;
  try {
    h0_restricted(F, B, SubspaceParam::from_matrix(F, P));
    FAIL("expected RankDropOnSubspace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDropOnSubspace);
  }
}

TEST_CASE("splitting type of a null-correlation-type row on lines") {
  auto A = simple_row();
  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    Vector P = random_point(F, rng, 4), Q = random_point(F, rng, 4);
    auto s = splitting_type_on_line(F, A, P, Q);
    int sum = 0;
    for (int a : s.degrees) sum += a;
    CHECK(sum == 0);
    CHECK(s.degrees.size() == 2);
    std::size_t corank = 1 - rank(F, line_pairing(F, A, P, Q));
    CHECK(static_cast<std::size_t>(s.positive_sum()) == corank);
  }
  // the line x0 = y0 = 0 is isotropic: A(P) J A(Q)^t = 0 there
  Vector P{0, 1, 0, 0}, Q{0, 0, 0, 1};
  CHECK(rank(F, line_pairing(F, A, P, Q)) == 1);
  Vector P2{0, 1, 0, 0}, Q2{1, 0, 0, 0};
  auto s2 = splitting_on_line(F, A, P2, Q2);
  CHECK(s2.type.positive_sum() == 1);
  CHECK(s2.type.degrees == std::vector<int>{1, -1});
}
