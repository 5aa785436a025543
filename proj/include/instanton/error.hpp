#pragma once

#include <stdexcept>
#include <string>

namespace instanton {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  RankDeficient,
  ZeroFunctional,
  NegativeResult,
  RankDropOnSubspace,
  DegenerateLine,
  FieldTooSmall,
  RetryLimit,
  DependentF,
  NotALine,
  TimeBudgetExceeded,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a stable status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace instanton
