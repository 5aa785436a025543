#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace instanton {

enum class Rationality { Rational, StablyRational, Unknown, NotApplicable };
const char* to_string(Rationality r);

enum class RSResidual { BMu2, End2ModSL2 };
const char* to_string(RSResidual r);

struct ModuliProfile {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t thooft_dim = 0;
  std::int64_t rs_dim = 0;
  std::int64_t two_power_e = 1;
  // Only meaningful for k >= 3.
  std::optional<std::int64_t> thooft_affine_exponent;
  std::optional<std::int64_t> thooft_residual_quotient_size;
  Rationality rationality = Rationality::NotApplicable;
  std::optional<bool> thooft_poincare;
  std::int64_t rs_stack_exponent = 0;
  RSResidual rs_residual = RSResidual::BMu2;
  bool rs_poincare = false;
  bool rs_space_rational = true;
};

std::int64_t thooft_moduli_dim(std::int64_t n, std::int64_t k);

/// (4n+2)k + 4n^2 + 2n - 4, checked against dim RS - dim G.
std::int64_t rs_moduli_dim(std::int64_t n, std::int64_t k);
std::int64_t rs_moduli_dim_from_counts(std::int64_t n, std::int64_t k);

/// Largest power of two dividing both n and k.
std::int64_t two_power_e(std::int64_t n, std::int64_t k);

ModuliProfile birational_profile(std::int64_t n, std::int64_t k);

struct EuclidStep {
  enum Kind { Unequal, Equal, Refine } kind;
  std::int64_t d1;
  std::int64_t d2;
  std::int64_t added;  // may be negative for a refinement
};

struct EuclidTrace {
  std::vector<EuclidStep> steps;
  std::int64_t h = 0;       // gcd(d1, d2)
  std::int64_t two_e = 0;   // largest power of two dividing h
  std::int64_t total = 0;   // sum of step contributions
  std::int64_t closed_form = 0;
};

/// Reduction of Sym x Gr_{d2}(C^{d1+d2}) / PO down to pairs of symmetric
/// 2^e x 2^e matrices, with the affine dimension each step splits off.
EuclidTrace euclid_trace(std::int64_t d1, std::int64_t d2);

}  // namespace instanton
