#pragma once

#include <optional>
#include <string>
#include <vector>

#include "instanton/serialize.hpp"

namespace instanton {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "v1";

enum class CheckStatus { Pass, Fail, Evidence, Skipped };
const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string id;
  std::string citation;  // the claim being checked, or "plumbing"
  CheckStatus status = CheckStatus::Pass;
  json expected;
  json observed;
  std::optional<json> witness;  // datum, point or subspace reproducing a failure
  double runtime_ms = 0;
};

struct VerificationReport {
  std::string command;
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<CheckRecord> checks;
  std::optional<json> extra;  // e.g. the moduli profile

  bool passed() const;  // no check has status Fail
  void sort_checks();
};

/// Timings are omitted unless requested so that reports replay byte for byte.
json to_json(const VerificationReport& r, bool timings = false);
std::string render_json(const VerificationReport& r, bool timings = false);
std::string render_markdown(const VerificationReport& r, bool timings = false);

}  // namespace instanton
