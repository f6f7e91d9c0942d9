#include "ftspan/error.hpp"

namespace ftspan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSymmetric: return "NonSymmetric";
    case ErrorCode::kNegativeDistance: return "NegativeDistance";
    case ErrorCode::kNonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::kTriangleViolation: return "TriangleViolation";
    case ErrorCode::kIdentityViolation: return "IdentityViolation";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kFaultNotSubset: return "FaultNotSubset";
    case ErrorCode::kFOutOfRange: return "FOutOfRange";
    case ErrorCode::kThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::kEpsOutOfRange: return "EpsOutOfRange";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kSeparationViolation: return "SeparationViolation";
    case ErrorCode::kCoverageViolation: return "CoverageViolation";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ftspan
