#pragma once

#include <stdexcept>
#include <string>

namespace tfbn {

enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  UnsupportedSurface,
  Overflow,
  NOutOfRange,
  ENotEffective,
  AdmissibilityViolation,
  DegenerateInput,
  ChartViolation,
  SamplingFailure,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that the CLI can map
/// it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace tfbn
