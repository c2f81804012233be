// SPDX-License-Identifier: Apache-2.0
#include "lsd/states.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "lsd/error.hpp"

namespace lsd {

namespace {

constexpr double kProbSumTol = 1e-9;
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-9;

std::size_t checked_power(std::size_t d, std::size_t n) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < n; ++k) {
    out *= d;
    if (out > kMaxDimension) {
      throw Error(Errc::DimensionTooLarge, "d^n = " + std::to_string(d) + "^" +
                                               std::to_string(n) + " exceeds " +
                                               std::to_string(kMaxDimension));
    }
  }
  return out;
}

template <std::size_t N>
ComplexMat mixture(const std::array<double, N>& p, const std::array<CVec, N>& basis) {
  ComplexMat rho(basis[0].size(), basis[0].size());
  for (std::size_t i = 0; i < N; ++i) {
    if (p[i] != 0.0) rho += p[i] * ComplexMat::projector(basis[i]);
  }
  return rho;
}

CVec basis_ket(std::size_t dim, std::size_t index) {
  CVec v(dim, cplx{0.0, 0.0});
  v[index] = 1.0;
  return v;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMat mat, std::vector<std::size_t> dims)
    : mat_(std::move(mat)), dims_(std::move(dims)) {
  if (auto reason = validate(mat_, dims_)) throw Error(Errc::InvariantViolation, *reason);
}

std::optional<std::string> DensityMatrix::validate(const ComplexMat& mat,
                                                   const std::vector<std::size_t>& dims) {
  if (!mat.is_square() || mat.empty()) return "matrix must be square and non-empty";
  if (dims.empty()) return "no subsystem dimensions given";
  std::size_t product = 1;
  for (auto d : dims) {
    if (d < 1) return "subsystem dimension must be positive";
    product *= d;
  }
  if (product != mat.rows()) {
    return "product of dims " + std::to_string(product) + " != matrix size " +
           std::to_string(mat.rows());
  }
  if (!mat.all_finite()) return "matrix has non-finite entries";
  if (!is_hermitian(mat, kHermTol)) return "matrix is not Hermitian";
  const cplx tr = mat.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    return "trace " + std::to_string(tr.real()) + " differs from 1";
  }
  if (!is_psd(mat, kPsdTol)) return "matrix is not positive semidefinite";
  return std::nullopt;
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<std::size_t> dims) {
  std::size_t n = 1;
  for (auto d : dims) n *= d;
  ComplexMat m = ComplexMat::identity(n);
  m *= 1.0 / static_cast<double>(n);
  return DensityMatrix(std::move(m), std::move(dims));
}

std::string family_name(const StateSpec& spec) {
  struct Visitor {
    std::string operator()(const Bd22Spec&) const { return "bd22"; }
    std::string operator()(const IcdSpec&) const { return "icd"; }
    std::string operator()(const Bd23Spec&) const { return "bd23"; }
    std::string operator()(const WernerSpec&) const { return "werner"; }
    std::string operator()(const IsotropicSpec&) const { return "isotropic"; }
    std::string operator()(const Horodecki33Spec&) const { return "horodecki33"; }
    std::string operator()(const MultiIsoSpec&) const { return "multi_iso"; }
    std::string operator()(const RawSpec&) const { return "raw"; }
  };
  return std::visit(Visitor{}, spec);
}

std::vector<std::size_t> spec_dims(const StateSpec& spec) {
  struct Visitor {
    std::vector<std::size_t> operator()(const Bd22Spec&) const { return {2, 2}; }
    std::vector<std::size_t> operator()(const IcdSpec&) const { return {2, 2}; }
    std::vector<std::size_t> operator()(const Bd23Spec&) const { return {2, 3}; }
    std::vector<std::size_t> operator()(const WernerSpec& s) const { return {s.d, s.d}; }
    std::vector<std::size_t> operator()(const IsotropicSpec& s) const { return {s.d, s.d}; }
    std::vector<std::size_t> operator()(const Horodecki33Spec&) const { return {3, 3}; }
    std::vector<std::size_t> operator()(const MultiIsoSpec& s) const {
      return std::vector<std::size_t>(s.parties, s.d);
    }
    std::vector<std::size_t> operator()(const RawSpec& s) const { return s.dims; }
  };
  return std::visit(Visitor{}, spec);
}

template <std::size_t N>
std::array<double, N> normalized_probabilities(const std::array<double, N>& p) {
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      throw Error(Errc::InvalidProbabilities, "probability " + std::to_string(x) +
                                                  " outside [0, 1]");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw Error(Errc::InvalidProbabilities, "probabilities sum to " + std::to_string(sum));
  }
  std::array<double, N> out = p;
  for (auto& x : out) x /= sum;
  return out;
}

template std::array<double, 4> normalized_probabilities<4>(const std::array<double, 4>&);
template std::array<double, 6> normalized_probabilities<6>(const std::array<double, 6>&);

std::array<CVec, 4> bell_basis_22() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {CVec{h, 0.0, 0.0, h}, CVec{h, 0.0, 0.0, -h}, CVec{0.0, h, h, 0.0},
          CVec{0.0, h, -h, 0.0}};
}

std::array<CVec, 4> icd_basis(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {CVec{c, 0.0, 0.0, s}, CVec{s, 0.0, 0.0, -c}, CVec{0.0, c, s, 0.0},
          CVec{0.0, s, -c, 0.0}};
}

std::array<CVec, 6> bell_basis_23() {
  const double h = std::numbers::sqrt2 / 2.0;
  auto pair = [h](std::size_t i, std::size_t j, double sign) {
    CVec v(6, cplx{0.0, 0.0});
    v[i] = h;
    v[j] = sign * h;
    return v;
  };
  // |ab> (1-indexed) -> (a-1)*3 + (b-1)
  return {pair(0, 4, 1.0), pair(0, 4, -1.0), pair(1, 5, 1.0),
          pair(1, 5, -1.0), pair(2, 3, 1.0), pair(2, 3, -1.0)};
}

CVec maximally_entangled(std::size_t d, std::size_t parties) {
  const std::size_t dim = checked_power(d, parties);
  CVec v(dim, cplx{0.0, 0.0});
  std::size_t stride = 0;
  for (std::size_t k = 0, p = 1; k < parties; ++k, p *= d) stride += p;
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v[i * stride] = amp;
  return v;
}

CorrelationVector correlation_vector(const std::array<double, 4>& raw) {
  const auto p = normalized_probabilities(raw);
  return {p[0] - p[1] + p[2] - p[3], -p[0] + p[1] + p[2] - p[3], p[0] + p[1] - p[2] - p[3]};
}

DensityMatrix make_bd22(const std::array<double, 4>& raw) {
  const auto p = normalized_probabilities(raw);
  return DensityMatrix(mixture(p, bell_basis_22()), {2, 2});
}

DensityMatrix make_icd(double theta, const std::array<double, 4>& raw) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0)) {
    throw Error(Errc::ThetaOutOfRange, "theta " + std::to_string(theta) + " outside (0, pi/2)");
  }
  const auto p = normalized_probabilities(raw);
  return DensityMatrix(mixture(p, icd_basis(theta)), {2, 2});
}

DensityMatrix make_bd23(const std::array<double, 6>& raw) {
  const auto p = normalized_probabilities(raw);
  return DensityMatrix(mixture(p, bell_basis_23()), {2, 3});
}

DensityMatrix make_werner(std::size_t d, double f) {
  if (d < 2) throw Error(Errc::ParamOutOfRange, "Werner dimension must be >= 2");
  if (!(f >= -1.0 && f <= 1.0)) {
    throw Error(Errc::ParamOutOfRange, "Werner f " + std::to_string(f) + " outside [-1, 1]");
  }
  checked_power(d, 2);
  const double dd = static_cast<double>(d);
  const double norm = dd * dd * dd - dd;
  ComplexMat rho = ((dd - f) / norm) * ComplexMat::identity(d * d);
  rho += ((dd * f - 1.0) / norm) * flip_operator(d);
  return DensityMatrix(std::move(rho), {d, d});
}

DensityMatrix make_isotropic(std::size_t d, double fidelity) {
  if (d < 2) throw Error(Errc::ParamOutOfRange, "isotropic dimension must be >= 2");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw Error(Errc::ParamOutOfRange,
                "isotropic F " + std::to_string(fidelity) + " outside [0, 1]");
  }
  const std::size_t n = checked_power(d, 2);
  const ComplexMat p_plus = ComplexMat::projector(maximally_entangled(d));
  const double dd = static_cast<double>(d);
  ComplexMat rho = ((1.0 - fidelity) / (dd * dd - 1.0)) * (ComplexMat::identity(n) - p_plus);
  rho += fidelity * p_plus;
  return DensityMatrix(std::move(rho), {d, d});
}

Horodecki33Parts horodecki33_parts() {
  auto ket = [](std::size_t a, std::size_t b) { return basis_ket(9, (a - 1) * 3 + (b - 1)); };
  Horodecki33Parts parts{ComplexMat::projector(maximally_entangled(3)), ComplexMat(9, 9),
                         ComplexMat(9, 9)};
  const double third = 1.0 / 3.0;
  parts.sigma_plus += third * ComplexMat::projector(ket(1, 2));
  parts.sigma_plus += third * ComplexMat::projector(ket(2, 3));
  parts.sigma_plus += third * ComplexMat::projector(ket(3, 1));
  parts.sigma_minus += third * ComplexMat::projector(ket(2, 1));
  parts.sigma_minus += third * ComplexMat::projector(ket(3, 2));
  parts.sigma_minus += third * ComplexMat::projector(ket(1, 3));
  return parts;
}

DensityMatrix make_horodecki33(double alpha) {
  if (!(alpha >= 2.0 && alpha <= 5.0)) {
    throw Error(Errc::ParamOutOfRange, "alpha " + std::to_string(alpha) + " outside [2, 5]");
  }
  const auto parts = horodecki33_parts();
  ComplexMat rho = (2.0 / 7.0) * parts.p_plus;
  rho += (alpha / 7.0) * parts.sigma_plus;
  rho += ((5.0 - alpha) / 7.0) * parts.sigma_minus;
  return DensityMatrix(std::move(rho), {3, 3});
}

double multi_iso_threshold(std::size_t d, std::size_t parties) {
  return 1.0 / (1.0 + std::pow(static_cast<double>(d), static_cast<double>(parties) - 1.0));
}

DensityMatrix make_multi_iso(std::size_t d, std::size_t parties, double s) {
  if (d < 2 || parties < 2) {
    throw Error(Errc::ParamOutOfRange, "multipartite isotropic state needs d >= 2 and n >= 2");
  }
  if (!(s >= 0.0 && s <= 1.0)) {
    throw Error(Errc::ParamOutOfRange, "s " + std::to_string(s) + " outside [0, 1]");
  }
  const std::size_t n = checked_power(d, parties);
  ComplexMat rho = ((1.0 - s) / static_cast<double>(n)) * ComplexMat::identity(n);
  rho += s * ComplexMat::projector(maximally_entangled(d, parties));
  return DensityMatrix(std::move(rho), std::vector<std::size_t>(parties, d));
}

DensityMatrix build(const StateSpec& spec) {
  struct Visitor {
    DensityMatrix operator()(const Bd22Spec& s) const { return make_bd22(s.p); }
    DensityMatrix operator()(const IcdSpec& s) const { return make_icd(s.theta, s.p); }
    DensityMatrix operator()(const Bd23Spec& s) const { return make_bd23(s.p); }
    DensityMatrix operator()(const WernerSpec& s) const { return make_werner(s.d, s.f); }
    DensityMatrix operator()(const IsotropicSpec& s) const {
      return make_isotropic(s.d, s.fidelity);
    }
    DensityMatrix operator()(const Horodecki33Spec& s) const {
      return make_horodecki33(s.alpha);
    }
    DensityMatrix operator()(const MultiIsoSpec& s) const {
      return make_multi_iso(s.d, s.parties, s.s);
    }
    DensityMatrix operator()(const RawSpec& s) const {
      if (s.matrix.rows() > kMaxDimension) {
        throw Error(Errc::DimensionTooLarge, "raw matrix larger than " +
                                                 std::to_string(kMaxDimension));
      }
      if (auto reason = DensityMatrix::validate(s.matrix, s.dims)) {
        throw Error(Errc::RawValidationFailed, *reason);
      }
      return DensityMatrix(s.matrix, s.dims);
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace lsd
