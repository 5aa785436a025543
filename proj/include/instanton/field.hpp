#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace instanton {

/// Residue in [0, p). The modulus lives in the PrimeField that produced it.
using Scalar = std::uint32_t;

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Inverse of a nonzero residue; throws on zero.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  Scalar from_int(std::int64_t v) const noexcept;
  /// Symmetric representative in (-p/2, p/2], handy for printing small values.
  std::int64_t to_signed(Scalar a) const noexcept;

  /// Element of exact multiplicative order `order`; requires order | p-1.
  Scalar root_of_unity(std::uint32_t order) const;

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Largest prime p < 2^31 with p = 1 (mod divisor), skipping the first `skip`
/// such primes. skip selects independent moduli for cross-checks.
std::uint32_t prime_with_torsion(std::uint32_t divisor, unsigned skip = 0);

enum class Modality { PrimeField };

struct FieldConfig {
  static constexpr std::uint32_t kDefaultPrime = 2147483647u;

  Modality modality = Modality::PrimeField;
  std::uint32_t prime = kDefaultPrime;
  std::uint64_t seed = 1;

  PrimeField field() const { return PrimeField(prime); }

  /// Rejects a configuration that cannot serve an (n, k) instance: the prime
  /// must exceed 2(2n+2k).
  void validate_for(int n, int k) const;
};

}  // namespace instanton
