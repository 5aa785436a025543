#pragma once

#include <chrono>
#include <cstdint>
#include <random>

#include "instanton/field.hpp"

namespace instanton {

/// Seeded generator with platform-independent draws. std::mt19937_64 output is
/// fixed by the standard; the distributions are not, so range reduction is
/// done here by rejection.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  Scalar scalar(const PrimeField& f) { return static_cast<Scalar>(below(f.modulus())); }
  Scalar nonzero(const PrimeField& f) { return static_cast<Scalar>(1 + below(f.modulus() - 1)); }

  /// Child seed for an independent sub-stream.
  std::uint64_t fork() { return engine_() ^ 0x9e3779b97f4a7c15ull; }

 private:
  std::mt19937_64 engine_;
};

/// Wall-clock budget; expired() is polled inside long eliminations.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(double seconds)
      : active_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}

  bool expired() const { return active_ && std::chrono::steady_clock::now() > end_; }
  /// Throws TimeBudgetExceeded once the budget is spent.
  void check() const;

 private:
  bool active_ = false;
  std::chrono::steady_clock::time_point end_{};
};

}  // namespace instanton
