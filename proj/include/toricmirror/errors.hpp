// Error type shared by every toricmirror module.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricmirror {

enum class ErrorKind {
  kParse,
  kInvalidInput,
  kZeroVector,
  kNotConvex,
  kCollinearTriple,
  kOriginNotInterior,
  kUnbounded,
  kRedundantHalfspace,
  kNotASymmetry,
  kNotFiniteOrder,
  kEllTooSmall,
  kOrientationAmbiguous,
  kPartitionFailure,
  kInconsistentGeometry,
  kUnexpectedBettiNumber,
  kDegreeTooHigh,
  kDegeneratePairing,
  kCaseMismatch,
  kDegenerateOffsets,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace toricmirror
