#include "doctest.h"

#include "instanton/error.hpp"
#include "instanton/thooft.hpp"

using namespace instanton;

namespace {
const PrimeField F(FieldConfig::kDefaultPrime);

bool independent(const std::vector<FormVector>& vs) {
  std::vector<Vector> rows;
  for (const auto& v : vs) rows.push_back(flatten(v));
  return rank(F, rows_to_matrix(rows, rows.front().size())) == vs.size();
}

bool in_kernel(const LinearFormMatrix& A, const FormVector& v) {
  for (const auto& e : apply(F, A, v))
    if (!e.is_zero()) return false;
  return true;
}
}  // namespace

TEST_CASE("build with zero a") {
  auto d = proof_witness_general(F, 1, 2);
  d.a = Matrix(2, 3);
  auto A = build_thooft(F, d);
  for (const auto& m : A.coeffs) CHECK(m.is_zero());
}

TEST_CASE("k = 1 build expands directly") {
  ThooftDatum d{1, 1, Matrix::from_ints(F, {{1, 1}}), {}, {}};
  for (std::size_t j = 0; j < 2; ++j) {
    d.l.push_back(HomogeneousForm::variable(4, j));
    d.lprime.push_back(HomogeneousForm::variable(4, 2 + j));
  }
  auto A = build_thooft(F, d);
  for (std::size_t j = 0; j < 4; ++j) CHECK(A.entry(0, j) == HomogeneousForm::variable(4, j));
}

TEST_CASE("every build is symplectic") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(3), k = 1 + rng.below(4);
    ThooftDatum d{n, k, Matrix::random(F, rng, k, n + k), {}, {}};
    for (std::size_t j = 0; j < n + k; ++j) {
      d.l.push_back(HomogeneousForm::random(F, rng, 2 * n + 2, 1));
      d.lprime.push_back(HomogeneousForm::random(F, rng, 2 * n + 2, 1));
    }
    CHECK(symplectic_check(F, build_thooft(F, d)));
    // adversarial: rank-one a, coinciding forms, zero pairs
    d.a = Matrix(k, n + k);
    for (std::size_t j = 0; j < n + k; ++j) d.a(0, j) = 1;
    d.l[0] = d.lprime[0];
    d.l.back() = HomogeneousForm::zero(2 * n + 2, 1);
    d.lprime.back() = HomogeneousForm::zero(2 * n + 2, 1);
    CHECK(symplectic_check(F, build_thooft(F, d)));
  }
}

TEST_CASE("canonical syzygies") {
  auto d = random_datum(F, 2, 3, 11);
  auto A = build_thooft(F, d);
  auto vs = canonical_syzygies(F, d);
  REQUIRE(vs.size() == 5);
  CHECK(independent(vs));
  for (const auto& v : vs) CHECK(in_kernel(A, v));
  CHECK(syzygy_dim(F, A, 1) >= 5);

  d.l[0] = HomogeneousForm::zero(6, 1);
  d.lprime[0] = HomogeneousForm::zero(6, 1);
  CHECK_FALSE(independent(canonical_syzygies(F, d)));
}

TEST_CASE("general witness section counts") {
  CHECK(syzygy_dim(F, build_thooft(F, proof_witness_general(F, 1, 3)), 1) == 4);
  CHECK(syzygy_dim(F, build_thooft(F, proof_witness_general(F, 1, 1)), 1) == 6);
  auto M = thooft_presentation(F, proof_witness_general(F, 2, 3), 20, 3);
  CHECK(M.rank_evidence.mode == EvidenceMode::Certificate);
  CHECK(h0_twist(F, M, 1) == 2);
}

TEST_CASE("repeated-pattern witness") {
  CHECK_THROWS_AS(proof_witness_syz(F, 1, 2), Error);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1, 3}, {2, 3}, {2, 4}, {3, 3}}) {
    auto d = proof_witness_syz(F, n, k);
    CHECK(symplectic_check(F, build_thooft(F, d)));
    CHECK(syzygy_dim_mixed_block(F, d) == n + k);
    CHECK(syzygy_dim(F, build_thooft(F, d), 1) >= n + k);
  }
}

TEST_CASE("mixed block is part of the full count") {
  auto d = proof_witness_general(F, 1, 3);
  CHECK(syzygy_dim_mixed_block(F, d) == 4);
  CHECK_THROWS_AS(syzygy_dim_mixed_block(F, random_datum(F, 1, 3, 2)), Error);
}

TEST_CASE("full-rank certificate") {
  auto d = proof_witness_general(F, 2, 3);
  CHECK(fullrank_certificate(F, d));
  auto e = d;
  e.l[1] = scale(F, 7, e.l[0]);
  CHECK_FALSE(fullrank_certificate(F, e));
  e = d;
  for (std::size_t i = 0; i < 3; ++i) e.a(i, 1) = e.a(i, 0);
  CHECK_FALSE(fullrank_certificate(F, e));
  CHECK(all_minors_nonzero(F, d.a));
  CHECK_FALSE(all_minors_nonzero(F, e.a));
}

TEST_CASE("random data") {
  CHECK(random_datum(F, 2, 3, 5) == random_datum(F, 2, 3, 5));
  CHECK_FALSE(random_datum(F, 2, 3, 5) == random_datum(F, 2, 3, 6));
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto M = thooft_presentation(F, random_datum(F, 2, 3, seed), 10, seed);
    CHECK(M.symplectic_verified);
    if (h0_twist(F, M, 1) == 2) ++good;
  }
  CHECK(good >= 9);
  auto s = random_structured_datum(F, 2, 3, 4);
  CHECK(fullrank_certificate(F, s));
  CHECK(thooft_presentation(F, s, 5, 1).rank_evidence.mode == EvidenceMode::Certificate);
}

TEST_CASE("deformation space dimension") {
  auto expected = [](std::size_t n, std::size_t k) { return (n + k) * (6 * n + 3 * k + 1); };
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{3, 6}, {4, 5}}) {
    auto A = build_thooft(F, random_datum(F, n, k, 21));
    CHECK(deformation_space_dim(F, A) == expected(n, k));
  }
  // small sizes: the space is strictly larger
  CHECK(deformation_space_dim(F, build_thooft(F, random_datum(F, 1, 3, 21))) == 66);
  CHECK(deformation_space_dim(F, build_thooft(F, random_datum(F, 2, 3, 21))) > expected(2, 3));
}

TEST_CASE("group action") {
  auto d = random_datum(F, 1, 3, 9);
  CHECK(apply_group(F, ThooftGroupElement::identity(F, 1, 3), d) == d);
  Rng rng(4);
  auto A = build_thooft(F, d);
  for (int t = 0; t < 3; ++t) {
    auto g = ThooftGroupElement::random(F, rng, 1, 3);
    for (std::size_t j = 0; j < 4; ++j) CHECK(determinant(F, g.beta[j]) == 1);
    auto B = build_thooft(F, apply_group(F, g, d));
    CHECK(symplectic_check(F, B));
    for (unsigned deg : {0u, 1u}) CHECK(syzygy_dim(F, B, deg) == syzygy_dim(F, A, deg));
    CHECK(deformation_space_dim(F, B) == deformation_space_dim(F, A));
  }
  auto minus = apply_group(F, ThooftGroupElement::minus_one(F, 1, 3), d);
  CHECK(minus == d);
  CHECK(syzygy_dim(F, build_thooft(F, minus), 1) == syzygy_dim(F, A, 1));
}

TEST_CASE("orbit rank") {
  CHECK(thooft_parameter_dim(1, 3) == 44);
  CHECK(thooft_group_dim(1, 3) == 25);
  auto d = random_datum(F, 1, 3, 1);
  CHECK(orbit_rank(F, d) == 25);
  CHECK(thooft_parameter_dim(1, 3) - orbit_rank(F, d) == 19);
  CHECK(orbit_rank(F, random_datum(F, 2, 4, 2)) == thooft_group_dim(2, 4));
  ThooftDatum zero{1, 3, Matrix(3, 4), std::vector<HomogeneousForm>(4, HomogeneousForm::zero(4, 1)),
                   std::vector<HomogeneousForm>(4, HomogeneousForm::zero(4, 1))};
  CHECK(orbit_rank(F, zero) < 25);
}

TEST_CASE("torus stability") {
  auto d = random_datum(F, 1, 3, 3);
  CHECK(torus_stable(d));
  auto e = d;
  for (std::size_t i = 0; i < 3; ++i) e.a(i, 0) = 0;
  CHECK_FALSE(torus_stable(e));
  e = d;
  e.l[0] = HomogeneousForm::zero(4, 1);
  CHECK(torus_stable(e));
  e.lprime[0] = HomogeneousForm::zero(4, 1);
  CHECK_FALSE(torus_stable(e));
}
