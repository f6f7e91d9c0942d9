#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftspan {

enum class ErrorCode {
  kNonSymmetric,
  kNegativeDistance,
  kNonzeroDiagonal,
  kTriangleViolation,
  kIdentityViolation,
  kNonFinite,
  kDimensionMismatch,
  kDisconnected,
  kFaultNotSubset,
  kFOutOfRange,
  kThetaOutOfRange,
  kEpsOutOfRange,
  kDuplicatePoints,
  kSeparationViolation,
  kCoverageViolation,
  kBadParams,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every recoverable failure in the library is reported with one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ftspan
