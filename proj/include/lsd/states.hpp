// SPDX-License-Identifier: Apache-2.0
//
// State families used throughout the library. Kets are ordered row-major in
// the computational basis: |a b> sits at index a * dB + b, with the 1-indexed
// kets |11>, |12>, ... of the literature mapped to 0-indexed positions.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lsd/matcore.hpp"

namespace lsd {

/// Largest Hilbert-space dimension any constructor will build.
inline constexpr std::size_t kMaxDimension = 64;

/// Hermitian, unit-trace, PSD matrix tagged with its subsystem dimensions.
class DensityMatrix {
 public:
  /// Throws InvariantViolation when `mat` is not a valid density matrix on
  /// the given dims (see validate()).
  DensityMatrix(ComplexMat mat, std::vector<std::size_t> dims);

  /// Reason the pair fails the density-matrix invariants, or nullopt:
  /// Hermitian within 1e-12 (relative), trace 1 within 1e-12, PSD within
  /// 1e-9, product of dims equal to the matrix size.
  static std::optional<std::string> validate(const ComplexMat& mat,
                                             const std::vector<std::size_t>& dims);

  static DensityMatrix maximally_mixed(std::vector<std::size_t> dims);

  const ComplexMat& mat() const noexcept { return mat_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return mat_.rows(); }
  bool is_bipartite() const noexcept { return dims_.size() == 2; }

 private:
  ComplexMat mat_;
  std::vector<std::size_t> dims_;
};

struct Bd22Spec {
  std::array<double, 4> p;
};
struct IcdSpec {
  double theta;
  std::array<double, 4> p;
};
struct Bd23Spec {
  std::array<double, 6> p;
};
struct WernerSpec {
  std::size_t d;
  double f;
};
struct IsotropicSpec {
  std::size_t d;
  double fidelity;
};
struct Horodecki33Spec {
  double alpha;
};
struct MultiIsoSpec {
  std::size_t d;
  std::size_t parties;
  double s;
};
struct RawSpec {
  std::vector<std::size_t> dims;
  ComplexMat matrix;
};

using StateSpec = std::variant<Bd22Spec, IcdSpec, Bd23Spec, WernerSpec, IsotropicSpec,
                               Horodecki33Spec, MultiIsoSpec, RawSpec>;

/// Schema tag of a spec: "bd22", "icd", "bd23", "werner", "isotropic",
/// "horodecki33", "multi_iso" or "raw".
std::string family_name(const StateSpec& spec);
std::vector<std::size_t> spec_dims(const StateSpec& spec);

/// Pauli-basis coordinates of a 2x2 Bell-diagonal state.
struct CorrelationVector {
  double t1;
  double t2;
  double t3;
};

/// Checks entries in [0,1] and a sum within 1e-9 of one, then divides by the
/// sum. Throws InvalidProbabilities otherwise.
template <std::size_t N>
std::array<double, N> normalized_probabilities(const std::array<double, N>& p);

/// |psi_1..4> = |phi+>, |phi->, |psi+>, |psi->.
std::array<CVec, 4> bell_basis_22();
/// |phi_1..4(theta)>; equals bell_basis_22() at theta = pi/4.
std::array<CVec, 4> icd_basis(double theta);
/// (|11> +- |22>)/sqrt2, (|12> +- |23>)/sqrt2, (|13> +- |21>)/sqrt2.
std::array<CVec, 6> bell_basis_23();
/// (1/sqrt d) sum_i |i i ... i> on `parties` copies of C^d.
CVec maximally_entangled(std::size_t d, std::size_t parties = 2);

CorrelationVector correlation_vector(const std::array<double, 4>& p);

DensityMatrix make_bd22(const std::array<double, 4>& p);
DensityMatrix make_icd(double theta, const std::array<double, 4>& p);
DensityMatrix make_bd23(const std::array<double, 6>& p);
DensityMatrix make_werner(std::size_t d, double f);
DensityMatrix make_isotropic(std::size_t d, double fidelity);
DensityMatrix make_horodecki33(double alpha);
DensityMatrix make_multi_iso(std::size_t d, std::size_t parties, double s);

/// Components of the 3x3 one-parameter family: P+ = |psi+><psi+|,
/// sigma+ = (|12><12| + |23><23| + |31><31|)/3 and sigma- = the reflected set.
struct Horodecki33Parts {
  ComplexMat p_plus;
  ComplexMat sigma_plus;
  ComplexMat sigma_minus;
};
Horodecki33Parts horodecki33_parts();

/// s0 = 1 / (1 + d^(n-1)), the separability threshold of make_multi_iso.
double multi_iso_threshold(std::size_t d, std::size_t parties);

/// Dispatches to the family constructor. Raw specs are validated and throw
/// RawValidationFailed when they are not density matrices.
DensityMatrix build(const StateSpec& spec);

}  // namespace lsd
