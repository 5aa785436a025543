#include "doctest.h"

#include "instanton/binary_forms.hpp"
#include "instanton/error.hpp"
#include "instanton/rs.hpp"

using namespace instanton;

namespace {
const PrimeField F(FieldConfig::kDefaultPrime);

HomogeneousForm var(std::size_t nvars, std::size_t i) { return HomogeneousForm::variable(nvars, i); }

std::vector<HomogeneousForm> random_forms(Rng& rng, std::size_t count, std::size_t nvars) {
  std::vector<HomogeneousForm> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(HomogeneousForm::random(F, rng, nvars, 1));
  return out;
}
}  // namespace

TEST_CASE("persymmetric builder") {
  Rng rng(1);
  auto h = random_forms(rng, 4, 4);
  auto row = persymmetric_from_generators(std::vector<HomogeneousForm>(h.begin(), h.begin() + 2), 1, 1);
  REQUIRE(row.size() == 1);
  CHECK(row[0] == std::vector<HomogeneousForm>{h[0], h[1]});
  auto H = persymmetric_from_generators(h, 1, 2);
  CHECK(H[0] == std::vector<HomogeneousForm>{h[0], h[1], h[2]});
  CHECK(H[1] == std::vector<HomogeneousForm>{h[1], h[2], h[3]});
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t k = 1; k <= 4; ++k) {
      auto g = random_forms(rng, n + 2 * k - 1, 2 * n + 2);
      auto M = persymmetric_from_generators(g, n, k);
      for (std::size_t i = 0; i + 1 < k; ++i)
        for (std::size_t j = 1; j < n + k; ++j) CHECK(M[i][j] == M[i + 1][j - 1]);
    }
  CHECK_THROWS_AS(persymmetric_from_generators(h, 2, 2), Error);
}

TEST_CASE("RS build") {
  Rng rng(2);
  RSDatum d{1, 1, random_forms(rng, 2, 4), random_forms(rng, 2, 4)};
  auto A = build_rs(F, d);
  CHECK(A.entry(0, 0) == d.f[0]);
  CHECK(A.entry(0, 1) == d.f[1]);
  CHECK(A.entry(0, 2) == d.h[0]);
  CHECK(A.entry(0, 3) == d.h[1]);
  d.f[1] = scale(F, 3, d.f[0]);
  try {
    build_rs(F, d);
    FAIL("expected DependentF");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DependentF);
  }
}

TEST_CASE("RS build is symplectic for every generator sequence") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(3), k = 1 + rng.below(4);
    auto d = random_rs_datum(F, n, k, seed);
    CHECK(symplectic_check(F, build_rs(F, d)));
    // degenerate generators: all equal, or all in span(f)
    for (auto& h : d.h) h = d.f[0];
    CHECK(symplectic_check(F, build_rs(F, d)));
  }
}

TEST_CASE("multiplication composition gives the persymmetric block") {
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 3}, {2, 3}, {3, 2}}) {
    auto d = random_rs_datum(F, n, k, 7 * n + k);
    CHECK(h_block_from_mult_map(F, d) == h_block_coefficients(build_rs(F, d)));
  }
}

TEST_CASE("banded F block has rank k off L") {
  auto d = random_rs_datum(F, 2, 3, 5);
  auto A = build_rs(F, d);
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    Vector x = random_point(F, rng, 6);
    Matrix M = A.evaluate(F, x);
    std::vector<std::size_t> cols{0, 1, 2, 3, 4};
    CHECK(rank(F, select_columns(M, cols)) == 3);
  }
}

TEST_CASE("epsilon family display") {
  const Scalar eps = 12345;
  auto d = epsilon_datum(F, 2, 3, eps);
  auto H = persymmetric_from_generators(d.h, 2, 3);
  const auto z = HomogeneousForm::zero(6, 1);
  const auto e = scale(F, eps, var(6, 4));
  auto y = [](std::size_t i) { return var(6, 3 + i); };
  CHECK(H[0] == std::vector<HomogeneousForm>{e, z, y(0), y(1), y(2)});
  CHECK(H[1] == std::vector<HomogeneousForm>{z, y(0), y(1), y(2), z});
  CHECK(H[2] == std::vector<HomogeneousForm>{y(0), y(1), y(2), z, e});
  for (std::size_t s = 0; s <= 2; ++s) CHECK(d.f[s] == var(6, s));
  CHECK(symplectic_check(F, build_rs(F, d)));
}

TEST_CASE("epsilon zero is rank k everywhere on samples") {
  auto M = make_presentation(F, build_rs(F, epsilon_datum(F, 2, 3, 0)), 30, 2);
  CHECK(M.rank_evidence.mode == EvidenceMode::Sampled);
  CHECK(M.rank_evidence.min_rank == 3);
}

TEST_CASE("epsilon family syzygies") {
  Rng rng(17);
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{2, 3}, {2, 4}, {3, 3}}) {
    const Scalar eps = rng.nonzero(F);
    auto A = build_rs(F, epsilon_datum(F, n, k, eps));
    auto vs = expected_syzygy_basis(F, n, k, eps);
    REQUIRE(vs.size() == k);
    std::vector<Vector> rows;
    for (const auto& v : vs) {
      for (const auto& entry : apply(F, A, v)) CHECK(entry.is_zero());
      rows.push_back(flatten(v));
    }
    CHECK(rank(F, rows_to_matrix(rows, rows.front().size())) == k);
    CHECK(syzygy_dim(F, A, 1) == k);
    auto M = make_presentation(F, A, 20, 3);
    CHECK(h0_twist(F, M, 1) == 0);
  }
}

TEST_CASE("distinguished subspace") {
  auto d = epsilon_datum(F, 2, 3, 5);
  auto L = distinguished_subspace(F, d);
  CHECK(L.dim() == 2);
  Matrix expected(6, 3);
  for (std::size_t i = 0; i < 3; ++i) expected(3 + i, i) = 1;
  CHECK(rank(F, hstack(L.P, expected)) == 3);

  auto r = random_rs_datum(F, 2, 3, 8);
  auto Lr = distinguished_subspace(F, r);
  auto AL = build_rs(F, r).restrict(F, Lr);
  for (const auto& m : AL.coeffs)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(m(i, j) == 0);
  CHECK(h0_restricted(F, build_rs(F, r), Lr) == 5);
}

TEST_CASE("maximal instability") {
  auto res = max_instability_check(F, random_rs_datum(F, 2, 3, 3), 50, 9);
  CHECK(res.distinguished == 5);
  CHECK(res.passed(2, 3));
  for (auto v : res.other_values) CHECK(v <= 4);
  for (auto b : res.bound_values) CHECK(b.value + b.r <= 2 * 2 + 3);
  CHECK(max_instability_check(F, random_rs_datum(F, 1, 2, 4), 20, 1).distinguished == 3);
}

TEST_CASE("k = 1: every n-plane reaches n+1 sections") {
  // 2n+2 column forms restricted to an n-plane span at most n+1 dimensions
  for (std::size_t n = 1; n <= 3; ++n) {
    auto res = max_instability_check(F, random_rs_datum(F, n, 1, n), 10, 2);
    CHECK(res.distinguished == n + 1);
    CHECK(res.counterexamples.size() == 10);
    for (auto v : res.other_values) CHECK(v == n + 1);
    CHECK_FALSE(res.passed(n, 1));
  }
}

TEST_CASE("rank drop on the distinguished subspace is reported") {
  auto d = random_rs_datum(F, 1, 2, 2);
  for (std::size_t m = 0; m < d.h.size(); ++m) d.h[m] = scale(F, static_cast<Scalar>(m + 1), d.f[m % 2]);
  auto A = build_rs(F, d);
  auto L = distinguished_subspace(F, d);
  try {
    h0_restricted(F, A, L);
    FAIL("expected RankDropOnSubspace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDropOnSubspace);
  }
  auto ev = sample_rank_evidence(F, A, 5, 1, &L);
  CHECK(ev.mode == EvidenceMode::Disproved);
  CHECK(ev.failing_point.has_value());
}

TEST_CASE("polynomial gcd") {
  // (s-1)(s-2) and (s-1)(s+5)
  Vector a{2, F.neg(3), 1}, b{F.neg(5), 4, 1};
  CHECK(poly_gcd(F, a, b) == Vector{F.neg(1), 1});
  CHECK(poly_gcd(F, Vector{1, 1}, Vector{2, 1}) == Vector{1});
  CHECK(poly_gcd(F, Vector{}, Vector{3, 6}) == Vector{F.inv(2), 1});
}

TEST_CASE("line minor certificate") {
  int ok = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    if (line_minor_certificate_n1(F, random_rs_datum(F, 1, 2, seed))) ++ok;
  CHECK(ok == 10);
  CHECK_THROWS_AS(line_minor_certificate_n1(F, random_rs_datum(F, 2, 2, 1)), Error);

  // epsilon family for n = 1: f = (x0, x1), L = span(y0, y1)
  auto d = epsilon_datum(F, 1, 3, 7);
  CHECK(line_minor_certificate_n1(F, d));
  // no y1 in any generator: H vanishes at the point (0:1) of L
  for (auto& h : d.h) h.coeffs[3] = 0;
  CHECK_FALSE(line_minor_certificate_n1(F, d));

  // k = 1: minors h0|_L and h1|_L
  RSDatum e{1, 1, {var(4, 0), var(4, 1)}, {var(4, 2), var(4, 3)}};
  CHECK(line_minor_certificate_n1(F, e));
  e.h[1] = scale(F, 4, var(4, 2));
  CHECK_FALSE(line_minor_certificate_n1(F, e));
  e.h[1] = add(F, var(4, 2), var(4, 3));
  CHECK(line_minor_certificate_n1(F, e));
}

TEST_CASE("certificate upgrades the presentation") {
  auto M = rs_presentation(F, random_rs_datum(F, 1, 3, 5), 10, 2);
  CHECK(M.rank_evidence.mode == EvidenceMode::Certificate);
  auto N = rs_presentation(F, random_rs_datum(F, 2, 3, 5), 10, 2);
  CHECK(N.rank_evidence.mode == EvidenceMode::Sampled);
}

TEST_CASE("RS group action") {
  auto d = random_rs_datum(F, 2, 3, 12);
  CHECK(apply_group(F, RSGroupElement::identity(2, 3), d) == d);
  auto A = build_rs(F, d);
  const std::size_t s0 = syzygy_dim(F, A, 0), s1 = syzygy_dim(F, A, 1);
  Rng rng(3);
  for (int t = 0; t < 3; ++t) {
    auto g = RSGroupElement::random(F, rng, 2, 3);
    auto e = apply_group(F, g, d);
    auto B = build_rs(F, e);
    CHECK(symplectic_check(F, B));
    CHECK(syzygy_dim(F, B, 0) == s0);
    CHECK(syzygy_dim(F, B, 1) == s1);
    auto L = distinguished_subspace(F, e);
    CHECK(rank(F, hstack(L.P, distinguished_subspace(F, d).P)) == 3);
    CHECK(h0_restricted(F, B, L) == 5);
  }
}

TEST_CASE("roots of unity act trivially") {
  // n+k-1 = 4 needs 4 | p-1, which fails for the default prime
  const std::uint32_t p = prime_with_torsion(4, 0);
  const PrimeField G(p);
  auto d = random_rs_datum(G, 2, 3, 1);
  auto g = root_of_unity_element(G, 2, 3);
  CHECK(G.pow(g.g(0, 0), 4) == 1);
  CHECK(G.pow(g.g(0, 0), 2) != 1);
  CHECK(apply_group(G, g, d) == d);
  // n+k-1 = 3 divides 2^31-2
  auto e = random_rs_datum(F, 1, 3, 2);
  CHECK(apply_group(F, root_of_unity_element(F, 1, 3), e) == e);
}

TEST_CASE("RS orbit rank") {
  CHECK(rs_parameter_dim(1, 3) == 32);
  CHECK(rs_group_dim(1, 3) == 12);
  CHECK(orbit_rank(F, random_rs_datum(F, 1, 3, 1)) == 12);
  CHECK(rs_parameter_dim(1, 3) - 12 == 6 * 3 + 2);
  CHECK(orbit_rank(F, random_rs_datum(F, 2, 3, 1)) == 14);
  CHECK(rs_parameter_dim(2, 3) - 14 == 46);
  RSDatum zero{1, 3, std::vector<HomogeneousForm>(2, HomogeneousForm::zero(4, 1)),
               std::vector<HomogeneousForm>(6, HomogeneousForm::zero(4, 1))};
  CHECK(orbit_rank(F, zero) < 12);
}
