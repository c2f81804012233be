// SPDX-License-Identifier: Apache-2.0
#include "lsd/error.hpp"

namespace lsd {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotPSD: return "NotPSD";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::InvalidProbabilities: return "InvalidProbabilities";
    case Errc::ThetaOutOfRange: return "ThetaOutOfRange";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::RawValidationFailed: return "RawValidationFailed";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::RawSpecUnsupported: return "RawSpecUnsupported";
    case Errc::WrongDims: return "WrongDims";
    case Errc::DegenerateBasis: return "DegenerateBasis";
    case Errc::BranchInfeasible: return "BranchInfeasible";
    case Errc::UnsupportedRawDims: return "UnsupportedRawDims";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::InfeasiblePoint: return "InfeasiblePoint";
    case Errc::NoDualCertificate: return "NoDualCertificate";
    case Errc::ParseError: return "ParseError";
    case Errc::UnsupportedSpec: return "UnsupportedSpec";
    case Errc::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace lsd
