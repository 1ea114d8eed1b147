#include "toricmirror/errors.hpp"

namespace toricmirror {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kZeroVector: return "ZeroVector";
    case ErrorKind::kNotConvex: return "NotConvex";
    case ErrorKind::kCollinearTriple: return "CollinearTriple";
    case ErrorKind::kOriginNotInterior: return "OriginNotInterior";
    case ErrorKind::kUnbounded: return "Unbounded";
    case ErrorKind::kRedundantHalfspace: return "RedundantHalfspace";
    case ErrorKind::kNotASymmetry: return "NotASymmetry";
    case ErrorKind::kNotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::kEllTooSmall: return "EllTooSmall";
    case ErrorKind::kOrientationAmbiguous: return "OrientationAmbiguous";
    case ErrorKind::kPartitionFailure: return "PartitionFailure";
    case ErrorKind::kInconsistentGeometry: return "InconsistentGeometry";
    case ErrorKind::kUnexpectedBettiNumber: return "UnexpectedBettiNumber";
    case ErrorKind::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::kDegeneratePairing: return "DegeneratePairing";
    case ErrorKind::kCaseMismatch: return "CaseMismatch";
    case ErrorKind::kDegenerateOffsets: return "DegenerateOffsets";
  }
  return "Error";
}

}  // namespace toricmirror
