// SPDX-License-Identifier: Apache-2.0
#include "lsd/separability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lsd/error.hpp"

namespace lsd {

namespace {

SeparabilityVerdict from_margin(double margin, std::string detail) {
  const auto status =
      margin >= -kRegionTol ? SeparabilityStatus::Separable : SeparabilityStatus::Entangled;
  return {status, margin, std::move(detail)};
}

}  // namespace

std::string to_string(SeparabilityStatus status) {
  switch (status) {
    case SeparabilityStatus::Separable: return "Separable";
    case SeparabilityStatus::Entangled: return "Entangled";
    case SeparabilityStatus::PptInconclusive: return "PptInconclusive";
  }
  return "Unknown";
}

SeparabilityVerdict ppt_check(const DensityMatrix& rho, double tol) {
  if (!rho.is_bipartite()) {
    throw Error(Errc::NotBipartite, "ppt_check needs exactly two subsystems, got " +
                                        std::to_string(rho.dims().size()));
  }
  const std::size_t da = rho.dims()[0];
  const std::size_t db = rho.dims()[1];
  const double mu = min_eigenvalue(partial_transpose(rho.mat(), da, db, Subsystem::B));
  const bool decisive = (da == 2 && (db == 2 || db == 3)) || (da == 3 && db == 2) ||
                        da == 1 || db == 1;
  if (mu < -tol) return {SeparabilityStatus::Entangled, mu, "ppt"};
  if (decisive) return {SeparabilityStatus::Separable, mu, "ppt"};
  return {SeparabilityStatus::PptInconclusive, mu, "ppt"};
}

SeparabilityVerdict bd22_region(const std::array<double, 4>& raw) {
  const auto p = normalized_probabilities(raw);
  const double pmax = *std::max_element(p.begin(), p.end());
  return from_margin(0.5 - pmax, "bd22-octahedron");
}

double icd_bound(double theta, double a, double b) {
  const double s = std::sin(2.0 * theta);
  return std::sqrt(4.0 * a * b / (s * s) + (a - b) * (a - b));
}

SeparabilityVerdict icd_region(double theta, const std::array<double, 4>& raw) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0)) {
    throw Error(Errc::ThetaOutOfRange, "theta " + std::to_string(theta) + " outside (0, pi/2)");
  }
  const auto p = normalized_probabilities(raw);
  const double r34 = icd_bound(theta, p[2], p[3]);
  const double r12 = icd_bound(theta, p[0], p[1]);
  const double margin = std::min({r34 - (p[0] - p[1]), r34 - (p[1] - p[0]),
                                  r12 - (p[2] - p[3]), r12 - (p[3] - p[2])});
  return from_margin(margin, "icd-ppt-inequalities");
}

SeparabilityVerdict bd23_region(const std::array<double, 6>& raw) {
  const auto p = normalized_probabilities(raw);
  const double a = p[0] + p[1];
  const double b = p[2] + p[3];
  const double c = p[4] + p[5];
  const double s1 = b * c - (p[0] - p[1]) * (p[0] - p[1]);
  const double s2 = c * a - (p[2] - p[3]) * (p[2] - p[3]);
  const double s3 = a * b - (p[4] - p[5]) * (p[4] - p[5]);
  return from_margin(std::min({s1, s2, s3}), "bd23-inequalities");
}

SeparabilityVerdict family_region(const StateSpec& spec) {
  struct Visitor {
    SeparabilityVerdict operator()(const Bd22Spec& s) const { return bd22_region(s.p); }
    SeparabilityVerdict operator()(const IcdSpec& s) const { return icd_region(s.theta, s.p); }
    SeparabilityVerdict operator()(const Bd23Spec& s) const { return bd23_region(s.p); }
    SeparabilityVerdict operator()(const WernerSpec& s) const {
      if (s.d < 2 || !(s.f >= -1.0 && s.f <= 1.0)) {
        throw Error(Errc::ParamOutOfRange, "invalid Werner parameters");
      }
      return from_margin(s.f, "werner");
    }
    SeparabilityVerdict operator()(const IsotropicSpec& s) const {
      if (s.d < 2 || !(s.fidelity >= 0.0 && s.fidelity <= 1.0)) {
        throw Error(Errc::ParamOutOfRange, "invalid isotropic parameters");
      }
      return from_margin(1.0 / static_cast<double>(s.d) - s.fidelity, "isotropic");
    }
    SeparabilityVerdict operator()(const Horodecki33Spec& s) const {
      if (!(s.alpha >= 2.0 && s.alpha <= 5.0)) {
        throw Error(Errc::ParamOutOfRange, "alpha outside [2, 5]");
      }
      const double margin = 3.0 - s.alpha;
      if (margin >= -kRegionTol) return {SeparabilityStatus::Separable, margin, "horodecki33"};
      // PPT holds up to alpha = 4; beyond it the state is distillable.
      return {SeparabilityStatus::Entangled, margin,
              s.alpha <= 4.0 ? "horodecki33-bound" : "horodecki33-distillable"};
    }
    SeparabilityVerdict operator()(const MultiIsoSpec& s) const {
      if (s.d < 2 || s.parties < 2 || !(s.s >= 0.0 && s.s <= 1.0)) {
        throw Error(Errc::ParamOutOfRange, "invalid multipartite isotropic parameters");
      }
      return from_margin(multi_iso_threshold(s.d, s.parties) - s.s, "multi_iso");
    }
    SeparabilityVerdict operator()(const RawSpec&) const {
      throw Error(Errc::RawSpecUnsupported, "family_region needs a named family");
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace lsd
