// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lsd {

enum class Errc {
  NotHermitian,
  NoConvergence,
  DimensionMismatch,
  NotPSD,
  NotSymmetric,
  InvalidProbabilities,
  ThetaOutOfRange,
  ParamOutOfRange,
  DimensionTooLarge,
  RawValidationFailed,
  NotBipartite,
  RawSpecUnsupported,
  WrongDims,
  DegenerateBasis,
  BranchInfeasible,
  UnsupportedRawDims,
  EmptyFamily,
  InfeasiblePoint,
  NoDualCertificate,
  ParseError,
  UnsupportedSpec,
  InvariantViolation,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure in the library is reported through this exception; `code()`
/// identifies the failure class, `what()` carries the human-readable context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lsd
