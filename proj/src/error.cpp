#include "curvecover/error.hpp"

namespace curvecover {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositiveSpeed: return "NonPositiveSpeed";
    case ErrorCode::BadSpec: return "BadSpec";
    case ErrorCode::BadFlag: return "BadFlag";
    case ErrorCode::FileError: return "FileError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace curvecover
