#include "doctest.h"

#include <numeric>

#include "instanton/moduli.hpp"

using namespace instanton;

TEST_CASE("'t Hooft moduli dimension") {
  CHECK(thooft_moduli_dim(2, 9) == 106);
  CHECK(thooft_moduli_dim(1, 3) == 19);
  CHECK(thooft_moduli_dim(1, 3) == 44 - 25);
  CHECK(thooft_moduli_dim(1, 1) == 9);
  for (std::int64_t n = 1; n <= 30; ++n)
    for (std::int64_t k = 1; k <= 30; ++k) {
      // deformation count minus dim(GL_k x Sp_{2n+2k})
      std::int64_t sp = (n + k) * (2 * n + 2 * k + 1);
      CHECK(thooft_moduli_dim(n, k) == (n + k) * (6 * n + 3 * k + 1) - (k * k + sp));
    }
}

TEST_CASE("RS moduli dimension") {
  for (std::int64_t k = 1; k <= 20; ++k) CHECK(rs_moduli_dim(1, k) == 6 * k + 2);
  CHECK(rs_moduli_dim(2, 3) == 46);
  for (std::int64_t n = 1; n <= 20; ++n)
    for (std::int64_t k = 1; k <= 20; ++k) CHECK(rs_moduli_dim(n, k) == rs_moduli_dim_from_counts(n, k));
}

TEST_CASE("profile examples") {
  auto a = birational_profile(2, 9);
  CHECK(a.two_power_e == 1);
  CHECK(a.rationality == Rationality::Rational);
  CHECK(a.thooft_poincare == true);
  CHECK(*a.thooft_affine_exponent == 106 - 2);

  auto b = birational_profile(4, 8);
  CHECK(b.two_power_e == 4);
  CHECK(b.rationality == Rationality::StablyRational);
  CHECK(b.thooft_poincare == false);

  auto c = birational_profile(16, 16);
  CHECK(c.two_power_e == 16);
  CHECK(c.rationality == Rationality::Unknown);

  auto d = birational_profile(2, 4);
  CHECK(d.rs_residual == RSResidual::End2ModSL2);
  CHECK_FALSE(d.rs_poincare);
  CHECK(d.rs_stack_exponent == rs_moduli_dim(2, 4) - 5);

  auto e = birational_profile(1, 2);
  CHECK(e.rationality == Rationality::NotApplicable);
  CHECK_FALSE(e.thooft_poincare.has_value());
}

TEST_CASE("profile truth table") {
  for (std::int64_t n = 1; n <= 32; ++n)
    for (std::int64_t k = 1; k <= 32; ++k) {
      auto p = birational_profile(n, k);
      std::int64_t g = std::gcd(n, k), q = 1;
      while (g % (2 * q) == 0) q *= 2;
      CHECK(p.two_power_e == q);
      const bool some_odd = n % 2 == 1 || k % 2 == 1;
      CHECK(p.rs_poincare == some_odd);
      CHECK((p.rs_residual == RSResidual::BMu2) == some_odd);
      CHECK(p.rs_stack_exponent == (4 * n + 2) * k + 4 * n * n + 2 * n - (some_odd ? 4 : 9));
      CHECK(p.rs_space_rational);
      if (k < 3) {
        CHECK(p.rationality == Rationality::NotApplicable);
        continue;
      }
      if (g % 4 != 0) {
        CHECK(p.rationality == Rationality::Rational);
      } else if (g % 16 != 0) {
        CHECK(p.rationality == Rationality::StablyRational);
      } else {
        CHECK(p.rationality == Rationality::Unknown);
      }
      CHECK(*p.thooft_poincare == some_odd);
      CHECK(*p.thooft_affine_exponent == 5 * k * n + 4 * n * n - q * (q + 3) / 2);
    }
}

TEST_CASE("Euclidean reduction") {
  auto a = euclid_trace(1, 1);
  CHECK(a.total == 1);
  REQUIRE(a.steps.size() == 1);
  CHECK(a.steps[0].kind == EuclidStep::Equal);

  auto b = euclid_trace(9, 2);
  CHECK(b.h == 1);
  CHECK(b.total == 27);

  auto c = euclid_trace(6, 4);
  CHECK(c.h == 2);
  CHECK(c.two_e == 2);
  CHECK(c.total == 29);

  auto d = euclid_trace(3, 3);
  CHECK(d.h == 3);
  CHECK(d.two_e == 1);
  CHECK(d.total == 13);
  CHECK(d.steps[1].kind == EuclidStep::Refine);

  for (std::int64_t d1 = 1; d1 <= 30; ++d1)
    for (std::int64_t d2 = 1; d2 <= 30; ++d2) {
      auto t = euclid_trace(d1, d2);
      CHECK(t.h == std::gcd(d1, d2));
      CHECK(t.total == d1 + d2 + d1 * d2 - t.two_e * (t.two_e + 3) / 2);
      CHECK(t.total == t.closed_form);
    }
}
