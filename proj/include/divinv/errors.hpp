#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divinv {

enum class ErrorCode {
  NotPrime,
  SizeBound,
  DivisionByZero,
  LevelMismatch,
  NotAUnit,
  ZeroElement,
  PrimeSearchExhausted,
  SplittingStalled,
  NotASubgroup,
  NoIntegerSolution,
  DivisibilityViolation,
  NotAPowerOfQ,
  NegativeConductor,
  IdentityFails,
  ConvergenceRegion,
  CacheCorrupt,
  IO,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can report it and callers can test for it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace divinv
