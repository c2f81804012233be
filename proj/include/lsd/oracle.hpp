// SPDX-License-Identifier: Apache-2.0
//
// Numerical cross-checks for the closed forms: the exact largest weight of a
// fixed separable candidate, a bisection variant, a search over a separable
// family, and a duality certificate for the one-variable LMI.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lsd/states.hpp"

namespace lsd {

/// Largest L >= 0 with rho - L sigma PSD, as 1 / mu_max(rho^-1/2 sigma rho^-1/2)
/// on the support of rho. Zero when sigma leaves that support.
/// Throws DimensionMismatch.
double lambda_max_fixed(const ComplexMat& rho, const ComplexMat& sigma);
double lambda_max_fixed(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Same quantity by bisection on the sign of the smallest eigenvalue of
/// rho - L sigma over [0, Tr rho / Tr sigma].
double lambda_max_bisect(const DensityMatrix& rho, const DensityMatrix& sigma,
                         double tol = 1e-12);

/// A set of separable candidates sigma.
///  - Interval: sigma = member(t), t in [lo, hi].
///  - Mixture: sigma = sum_j w_j components[j] with w on the simplex and
///    sigma restricted to the PPT cone (exact on 2x2 and 2x3).
struct SeparableFamily {
  enum class Kind { Interval, Mixture };

  std::string name;
  Kind kind = Kind::Interval;
  std::vector<std::size_t> dims;
  std::function<ComplexMat(double)> member;
  double lo = 0.0;
  double hi = 0.0;
  /// Unit-trace PSD operators.
  std::vector<ComplexMat> components;
};

/// The family each closed form optimizes over. Raw 2x2 specs use mixtures of
/// the normalized spin-flip basis vectors of the state. Throws
/// UnsupportedRawDims for other raw dims.
SeparableFamily separable_family_for(const StateSpec& spec);

struct BsaOptions {
  /// Interval families: golden-section bracket width. Mixture families:
  /// target duality-gap bound of the barrier method.
  double tol = 1e-11;
  std::uint64_t seed = 0;
  /// Extra mixture runs from jittered starting weights; merged by max.
  std::size_t restarts = 0;
  std::size_t max_iterations = 2000;
};

struct BsaResult {
  double lambda;
  DensityMatrix sigma_star;
  /// t for interval families, the simplex weights for mixtures.
  std::vector<double> parameters;
  std::size_t iterations;
  /// Upper bound on lambda over the family from the barrier duality gap.
  /// Equals lambda for interval families. Infinite when the PPT-feasible
  /// mixtures have empty interior; lambda is then a vertex lower bound.
  double upper_bound;
};

/// Maximizes lambda_max_fixed(rho, sigma) over the family. Throws EmptyFamily
/// and DimensionMismatch.
BsaResult bsa_search(const DensityMatrix& rho, const SeparableFamily& family,
                     const BsaOptions& options = {});

/// minimize c^T x subject to F0 + sum_i x_i F_i >= 0.
struct SdpProblem {
  std::vector<double> c;
  ComplexMat f0;
  std::vector<ComplexMat> fi;
};

struct DualityReport {
  double primal_value;
  double dual_value;
  double gap;
  /// ||F(x) Z||_F
  double slackness_residual;
};

/// x = (L), c = (-1), F(L) = rho - L sigma. Throws DimensionMismatch.
SdpProblem bsa_as_sdp(const DensityMatrix& rho, const DensityMatrix& sigma);

/// F(x) at the given point.
ComplexMat lmi_value(const SdpProblem& problem, const std::vector<double>& x);

/// Builds Z as a multiple of the projector onto ker F(x_hat) chosen so that
/// Tr[F_i Z] = c_i, and reports the primal/dual values. Throws InfeasiblePoint
/// when F(x_hat) is not PSD and NoDualCertificate when the kernel is empty or
/// admits no such scaling.
DualityReport duality_check(const SdpProblem& problem, const std::vector<double>& x_hat);

}  // namespace lsd
