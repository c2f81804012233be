// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>

#include "lsd/states.hpp"

namespace lsd {

enum class SeparabilityStatus { Separable, Entangled, PptInconclusive };

std::string to_string(SeparabilityStatus status);

struct SeparabilityVerdict {
  SeparabilityStatus status;
  /// Signed distance to the deciding boundary, in the natural units of the
  /// test that fired (eigenvalue, probability, parameter).
  double margin;
  /// Which criterion decided, e.g. "ppt", "bd22-octahedron", "werner".
  std::string detail;
};

/// Absolute slack on the minimum partial-transpose eigenvalue; boundary states
/// count as separable.
inline constexpr double kPptTol = 1e-9;
/// Slack applied to the closed-form region inequalities.
inline constexpr double kRegionTol = 1e-12;

/// Peres-Horodecki test. Decisive on 2x2 and 2x3 (either order); elsewhere a
/// passing test is reported as PptInconclusive. Throws NotBipartite.
SeparabilityVerdict ppt_check(const DensityMatrix& rho, double tol = kPptTol);

/// Octahedron test: separable iff max p_i <= 1/2; margin = 1/2 - max p_i.
SeparabilityVerdict bd22_region(const std::array<double, 4>& p);
/// The four partial-transpose inequalities of the iso-concurrence family;
/// margin = min over them of (rhs - lhs).
SeparabilityVerdict icd_region(double theta, const std::array<double, 4>& p);
/// (p1-p2)^2 <= (p3+p4)(p5+p6) and its two cyclic partners; margin = min slack.
SeparabilityVerdict bd23_region(const std::array<double, 6>& p);
/// Threshold test for any named family. Throws RawSpecUnsupported on Raw.
SeparabilityVerdict family_region(const StateSpec& spec);

/// sqrt(4 a b / sin^2(2 theta) + (a - b)^2), the right-hand side of the
/// iso-concurrence inequalities.
double icd_bound(double theta, double a, double b);

}  // namespace lsd
