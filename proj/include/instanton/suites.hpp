#pragma once

#include <optional>

#include "instanton/report.hpp"

namespace instanton {

struct SuiteOptions {
  std::size_t n = 1;
  std::size_t k = 3;
  std::uint32_t prime = FieldConfig::kDefaultPrime;
  std::uint64_t seed = 1;
  int trials = 50;
  double budget_s = 120;
  std::optional<json> input;  // datum replacing the random one
};

// Each suite throws Error(TimeBudgetExceeded) once budget_s is spent and
// Error(InvalidArgument / Parse / FieldTooSmall) on bad options.
VerificationReport thooft_verify(const SuiteOptions& o);
VerificationReport thooft_ottaviani(const SuiteOptions& o);
VerificationReport rs_verify(const SuiteOptions& o);
VerificationReport rs_epsilon(const SuiteOptions& o);
VerificationReport moduli_report(const SuiteOptions& o);
VerificationReport splitting_survey(const SuiteOptions& o);

/// Largest prime below p.
std::uint32_t previous_prime(std::uint32_t p);

/// Expected h^0(E(1)) for a general 't Hooft bundle.
std::size_t expected_thooft_h0(std::size_t n, std::size_t k);

}  // namespace instanton
