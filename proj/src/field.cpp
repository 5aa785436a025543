#include "instanton/field.hpp"

#include "instanton/error.hpp"

namespace instanton {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ZeroFunctional: return "ZeroFunctional";
    case ErrorCode::NegativeResult: return "NegativeResult";
    case ErrorCode::RankDropOnSubspace: return "RankDropOnSubspace";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::RetryLimit: return "RetryLimit";
    case ErrorCode::DependentF: return "DependentF";
    case ErrorCode::NotALine: return "NotALine";
    case ErrorCode::TimeBudgetExceeded: return "TimeBudgetExceeded";
  }
  return "Unknown";
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument,
                "modulus " + std::to_string(p) + " is not an odd prime below 2^31");
  }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a;
  while (e != 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

Scalar PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

std::int64_t PrimeField::to_signed(Scalar a) const noexcept {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

Scalar PrimeField::root_of_unity(std::uint32_t order) const {
  if (order == 0 || (p_ - 1) % order != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "no element of order " + std::to_string(order) + " mod " + std::to_string(p_));
  }
  std::vector<std::uint32_t> primes;
  std::uint32_t m = p_ - 1;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);

  for (Scalar g = 2; g < p_; ++g) {
    bool generator = true;
    for (auto q : primes) {
      if (pow(g, (p_ - 1) / q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return pow(g, (p_ - 1) / order);
  }
  throw Error(ErrorCode::InvalidArgument, "no generator found");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t prime_with_torsion(std::uint32_t divisor, unsigned skip) {
  if (divisor == 0) divisor = 1;
  std::uint64_t step = divisor % 2 == 0 ? divisor : 2ull * divisor;
  std::uint64_t top = (1ull << 31) - 1;
  std::uint64_t candidate = top - (top - 1) % step;  // largest value = 1 mod step
  for (; candidate > step; candidate -= step) {
    if (is_prime(candidate)) {
      if (skip == 0) return static_cast<std::uint32_t>(candidate);
      --skip;
    }
  }
  throw Error(ErrorCode::FieldTooSmall, "no suitable prime below 2^31");
}

void FieldConfig::validate_for(int n, int k) const {
  if (n < 1 || k < 1) {
    throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  }
  if (!is_prime(prime) || prime >= (1u << 31)) {
    throw Error(ErrorCode::InvalidArgument, "prime " + std::to_string(prime) + " is not a prime below 2^31");
  }
  if (static_cast<std::uint64_t>(prime) <= 2ull * (2ull * n + 2ull * k)) {
    throw Error(ErrorCode::FieldTooSmall,
                "prime " + std::to_string(prime) + " must exceed 2(2n+2k) = " +
                    std::to_string(2 * (2 * n + 2 * k)));
  }
}

}  // namespace instanton
