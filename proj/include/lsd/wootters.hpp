// SPDX-License-Identifier: Apache-2.0
//
// Spin-flip machinery for two-qubit states: rho~, the lambda spectrum,
// concurrence, and a decomposition rho = sum |x_i><x_i| whose spin-flip
// overlaps are diagonal.
#pragma once

#include <array>

#include "lsd/states.hpp"

namespace lsd {

struct WoottersData {
  /// Descending, nonnegative.
  std::array<double, 4> lambdas;
  /// Subnormalized vectors with <x_i | x~_j> = lambda_i delta_ij and
  /// sum |x_i><x_i| = rho. Zero vectors outside the support of rho.
  std::array<CVec, 4> x;
  /// x_i / sqrt(lambda_i); zero when lambda_i vanishes.
  std::array<CVec, 4> x_prime;
  /// k_i = <x'_i|x'_i>; reported as 0 when lambda_i vanishes.
  std::array<double, 4> k;
  /// false where lambda_i vanishes and k_i is therefore undefined.
  std::array<bool, 4> k_defined;
  /// P_i = <x_i|x_i>, equal to lambda_i k_i wherever k_i is defined.
  std::array<double, 4> weights;
  double concurrence;
};

/// sigma_y (x) sigma_y, which is real and symmetric.
ComplexMat spin_flip_operator();

/// rho~ = (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y). Throws WrongDims.
ComplexMat spin_flip(const DensityMatrix& rho);
/// |x~> = (sigma_y (x) sigma_y) |x>*.
CVec spin_flip(std::span<const cplx> x);

/// Square roots of the eigenvalues of rho rho~, descending, computed from the
/// Hermitian product sqrt(rho) rho~ sqrt(rho).
std::array<double, 4> wootters_lambdas(const DensityMatrix& rho);

/// max(0, lambda_1 - lambda_2 - lambda_3 - lambda_4).
double concurrence(const DensityMatrix& rho);

/// Builds the spin-flip diagonal decomposition by Takagi-factorizing
/// tau_ij = <v_i|v~_j> on the support of rho. Throws WrongDims, and
/// DegenerateBasis when lambda_1 vanishes.
WoottersData wootters_basis(const DensityMatrix& rho);

}  // namespace lsd
