#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvecover {

enum class ErrorCode {
  DimensionMismatch,
  DegenerateCurve,
  NotNormalized,
  OutOfRange,
  KTooSmall,
  NotAPartition,
  NoBracket,
  EmptyInput,
  NonPositiveSpeed,
  BadSpec,
  BadFlag,
  FileError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; code() identifies the
// precondition that was violated.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace curvecover
