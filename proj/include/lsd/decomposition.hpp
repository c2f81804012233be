// SPDX-License-Identifier: Apache-2.0
//
// Closed-form optimal Lewenstein-Sanpera decompositions
//   rho = lambda * rho_s + (1 - lambda) * rho_e
// for the supported state families, and an independent verifier.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "lsd/separability.hpp"
#include "lsd/states.hpp"

namespace lsd {

struct LSDecomposition {
  double lambda;
  DensityMatrix separable_part;
  /// Unnormalized: trace 1 - lambda.
  ComplexMat entangled_part;
  /// entangled_part / (1 - lambda); absent when lambda = 1.
  std::optional<DensityMatrix> entangled_normalized;
  /// ||rho - lambda rho_s - entangled_part||_F
  double residual_norm;
  std::string method;
  /// Family parameters of separable_part when it belongs to a named family.
  std::optional<StateSpec> separable_spec;
};

enum class Bd23Branch { A, B };

LSDecomposition lsd_bd22(const std::array<double, 4>& p);
LSDecomposition lsd_icd(double theta, const std::array<double, 4>& p);
LSDecomposition lsd_wootters(const DensityMatrix& rho);
/// Rank-one entangled part. When several pair inequalities are violated the
/// candidate for each is tried and the largest feasible lambda wins; throws
/// BranchInfeasible when none yields a separable remainder.
LSDecomposition lsd_bd23(const std::array<double, 6>& p);
/// Alternative decomposition with a higher-rank entangled part, evaluated on p
/// in the order given. Returned only when every derived weight is a
/// probability, the separable part lies in the region and the remainder is
/// PSD; BranchInfeasible otherwise.
LSDecomposition lsd_bd23_rank3(const std::array<double, 6>& p, Bd23Branch branch);
LSDecomposition lsd_werner(std::size_t d, double f);
LSDecomposition lsd_isotropic(std::size_t d, double fidelity);
LSDecomposition lsd_horodecki33(double alpha);
LSDecomposition lsd_multi_iso(std::size_t d, std::size_t parties, double s);

/// Dispatch on the spec. Raw input must be 2x2 (routed to lsd_wootters);
/// other raw dims throw UnsupportedRawDims. Invariants are re-checked before
/// returning; a failure throws InvariantViolation.
LSDecomposition decompose(const StateSpec& spec);

struct VerificationReport {
  double residual_norm;
  SeparabilityVerdict separable_verdict;
  /// Smallest eigenvalue of rho - lambda rho_s.
  double residual_min_eig;
  /// Eigenvalues of rho - lambda rho_s above 1e-8 of its trace.
  std::size_t residual_rank;
  /// Tr[E^2] / Tr[E]^2 of the entangled part; absent when it vanishes.
  std::optional<double> purity;
};

/// Recomputes every decomposition invariant from rho and dec alone.
/// Throws DimensionMismatch when the two disagree in shape.
VerificationReport verify(const DensityMatrix& rho, const LSDecomposition& dec);

}  // namespace lsd
