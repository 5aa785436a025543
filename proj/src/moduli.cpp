#include "instanton/moduli.hpp"

#include <numeric>
#include <utility>

#include "instanton/error.hpp"

namespace instanton {

namespace {

void require_positive(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "arguments must be positive");
}

// Euclid on (d1, d2) starting from total dimension d1+d2; returns h.
std::int64_t reduce(std::int64_t d1, std::int64_t d2, std::vector<EuclidStep>& steps) {
  if (d1 < d2) std::swap(d1, d2);
  for (;;) {
    if (d1 == d2) {
      steps.push_back({EuclidStep::Equal, d1, d2, d1 * (d1 + 1) / 2});
      return d1;
    }
    steps.push_back({EuclidStep::Unequal, d1, d2, d2 * (d2 + 1)});
    std::int64_t a = d1 - d2, b = d2;
    if (a < b) std::swap(a, b);
    d1 = a;
    d2 = b;
  }
}

std::int64_t largest_two_power(std::int64_t h) { return h & -h; }

}  // namespace

const char* to_string(Rationality r) {
  switch (r) {
    case Rationality::Rational: return "rational";
    case Rationality::StablyRational: return "stably-rational";
    case Rationality::Unknown: return "unknown";
    case Rationality::NotApplicable: return "not-applicable";
  }
  return "?";
}

const char* to_string(RSResidual r) { return r == RSResidual::BMu2 ? "B_mu2" : "End2-mod-SL2"; }

std::int64_t thooft_moduli_dim(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  return 5 * k * n + 4 * n * n;
}

std::int64_t rs_moduli_dim(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  std::int64_t v = (4 * n + 2) * k + 4 * n * n + 2 * n - 4;
  if (v != rs_moduli_dim_from_counts(n, k)) throw Error(ErrorCode::InvalidArgument, "dimension routes disagree");
  return v;
}

std::int64_t rs_moduli_dim_from_counts(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  return (2 * n + 2 * k) * (2 * n + 2) - (2 * n + 2 * k + 4);
}

std::int64_t two_power_e(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  return largest_two_power(std::gcd(n, k));
}

ModuliProfile birational_profile(std::int64_t n, std::int64_t k) {
  require_positive(n, k);
  ModuliProfile p;
  p.n = n;
  p.k = k;
  p.thooft_dim = thooft_moduli_dim(n, k);
  p.rs_dim = rs_moduli_dim(n, k);
  const std::int64_t q = two_power_e(n, k);
  p.two_power_e = q;
  if (k >= 3) {
    p.thooft_affine_exponent = p.thooft_dim - q * (q + 3) / 2;
    p.thooft_residual_quotient_size = q;
    p.rationality = q <= 2 ? Rationality::Rational : q <= 8 ? Rationality::StablyRational : Rationality::Unknown;
    p.thooft_poincare = q == 1;
  }
  const bool both_even = n % 2 == 0 && k % 2 == 0;
  p.rs_stack_exponent = both_even ? p.rs_dim - 5 : p.rs_dim;
  p.rs_residual = both_even ? RSResidual::End2ModSL2 : RSResidual::BMu2;
  p.rs_poincare = !both_even;
  p.rs_space_rational = true;
  return p;
}

EuclidTrace euclid_trace(std::int64_t d1, std::int64_t d2) {
  require_positive(d1, d2);
  EuclidTrace t;
  const std::int64_t d = d1 + d2;
  t.h = reduce(d1, d2, t.steps);
  t.two_e = largest_two_power(t.h);
  if (t.h > t.two_e) {
    // Trade one symmetric factor for a Grassmannian Gr_{2^e}(C^h), then reduce again.
    const std::int64_t h = t.h, q = t.two_e;
    t.steps.push_back({EuclidStep::Refine, h, q, h * (h + 1) / 2 - q * (h - q)});
    reduce(h - q, q, t.steps);
  }
  for (const auto& s : t.steps) t.total += s.added;
  t.closed_form = d + d1 * d2 - t.two_e * (t.two_e + 3) / 2;
  return t;
}

}  // namespace instanton
