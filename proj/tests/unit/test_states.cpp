#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lsd/states.hpp"
#include "support.hpp"

using namespace lsd;
using lsd::testing::error_code;
using lsd::testing::Rng;

TEST_CASE("correlation vector of a Bell-diagonal state") {
  const auto t = correlation_vector({0.7, 0.1, 0.1, 0.1});
  CHECK(std::abs(t.t1 - 0.6) < 1e-15);
  CHECK(std::abs(t.t2 + 0.6) < 1e-15);
  CHECK(std::abs(t.t3 - 0.6) < 1e-15);
  // t_i = Tr[rho sigma_i (x) sigma_i]
  const auto rho = make_bd22({0.7, 0.1, 0.1, 0.1});
  const double tr1 = (rho.mat() * kron(pauli::x(), pauli::x())).trace().real();
  const double tr2 = (rho.mat() * kron(pauli::y(), pauli::y())).trace().real();
  const double tr3 = (rho.mat() * kron(pauli::z(), pauli::z())).trace().real();
  CHECK(std::abs(tr1 - t.t1) < 1e-14);
  CHECK(std::abs(tr2 - t.t2) < 1e-14);
  CHECK(std::abs(tr3 - t.t3) < 1e-14);
}

TEST_CASE("bases are orthonormal") {
  auto check = [](const auto& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        CHECK(std::abs(inner(basis[i], basis[j]) - cplx(i == j ? 1.0 : 0.0)) < 1e-15);
      }
    }
  };
  check(bell_basis_22());
  check(icd_basis(0.3));
  check(bell_basis_23());
  const auto b = bell_basis_22();
  const auto c = icd_basis(std::numbers::pi / 4);
  for (int i = 0; i < 4; ++i) CHECK(norm(CVec{b[i][0] - c[i][0], b[i][1] - c[i][1],
                                              b[i][2] - c[i][2], b[i][3] - c[i][3]}) < 1e-15);
}

TEST_CASE("family constructors produce valid density matrices") {
  CHECK_NOTHROW(make_icd(std::numbers::pi / 6, {0.6, 0.2, 0.1, 0.1}));
  const auto icd = make_icd(std::numbers::pi / 6, {0.6, 0.2, 0.1, 0.1});
  CHECK(std::abs(icd.mat().trace().real() - 1.0) < 1e-14);
  CHECK(is_psd(icd.mat()));
  CHECK(make_bd23({0.5, 0.1, 0.1, 0.1, 0.1, 0.1}).dims() == std::vector<std::size_t>{2, 3});
  CHECK(make_multi_iso(3, 3, 0.2).dim() == 27);
}

TEST_CASE("werner: f = -1 in d = 2 is the singlet") {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexMat singlet = ComplexMat::projector(CVec{0.0, s, -s, 0.0});
  CHECK(testing::max_abs_diff(make_werner(2, -1.0).mat(), singlet) < 1e-15);
}

TEST_CASE("werner: d = 3, f = 0 is (3I - F)/24") {
  const auto rho = make_werner(3, 0.0);
  const ComplexMat expected = (1.0 / 24.0) * (3.0 * ComplexMat::identity(9) - flip_operator(3));
  CHECK(distance(rho.mat(), expected) < 1e-15);
  const auto ev = hermitian_eigenvalues(rho.mat());
  // eigenvalues of F are +-1: 2/24 (x6) and 4/24 (x3)
  for (int k = 0; k < 6; ++k) CHECK(std::abs(ev[k] - 2.0 / 24.0) < 1e-14);
  for (int k = 6; k < 9; ++k) CHECK(std::abs(ev[k] - 4.0 / 24.0) < 1e-14);
}

TEST_CASE("werner: Tr[rho F] = f") {
  for (double f : {-1.0, -0.3, 0.0, 0.4, 1.0}) {
    for (std::size_t d : {2u, 3u, 4u}) {
      const auto rho = make_werner(d, f);
      CHECK(std::abs((rho.mat() * flip_operator(d)).trace().real() - f) < 1e-13);
    }
  }
}

TEST_CASE("isotropic: F = 1/d^2 is maximally mixed, fidelity is F") {
  const auto rho = make_isotropic(3, 1.0 / 9.0);
  CHECK(distance(rho.mat(), (1.0 / 9.0) * ComplexMat::identity(9)) < 1e-15);
  const auto psi = maximally_entangled(4);
  const auto iso = make_isotropic(4, 0.37);
  CHECK(std::abs(inner(psi, iso.mat() * std::span<const cplx>(psi)).real() - 0.37) < 1e-14);
}

TEST_CASE("horodecki33: affine structure in alpha") {
  const double alpha = 3.7;
  const ComplexMat lhs = make_horodecki33(alpha).mat();
  const ComplexMat rhs = ((5.0 - alpha) / 2.0) * make_horodecki33(3.0).mat() +
                         ((alpha - 3.0) / 2.0) * make_horodecki33(5.0).mat();
  CHECK(distance(lhs, rhs) < 1e-15);
}

TEST_CASE("multi_iso: d = 2, n = 3, s = 0.5 fidelity 0.5625") {
  const auto rho = make_multi_iso(2, 3, 0.5);
  const auto psi = maximally_entangled(2, 3);
  CHECK(std::abs(rho.mat().trace().real() - 1.0) < 1e-15);
  CHECK(is_psd(rho.mat()));
  CHECK(std::abs(inner(psi, rho.mat() * std::span<const cplx>(psi)).real() - 0.5625) < 1e-15);
  CHECK(std::abs(multi_iso_threshold(2, 3) - 0.2) < 1e-16);
}

TEST_CASE("constructors reject bad parameters") {
  CHECK(error_code([] { make_bd22({0.5, 0.5, 0.5, 0.0}); }) == Errc::InvalidProbabilities);
  CHECK(error_code([] { make_bd22({1.2, -0.2, 0.0, 0.0}); }) == Errc::InvalidProbabilities);
  CHECK(error_code([] { make_icd(0.0, {1, 0, 0, 0}); }) == Errc::ThetaOutOfRange);
  CHECK(error_code([] { make_icd(std::numbers::pi / 2, {1, 0, 0, 0}); }) ==
        Errc::ThetaOutOfRange);
  CHECK(error_code([] { make_werner(2, 1.5); }) == Errc::ParamOutOfRange);
  CHECK(error_code([] { make_werner(9, 0.0); }) == Errc::DimensionTooLarge);
  CHECK(error_code([] { make_isotropic(1, 0.5); }) == Errc::ParamOutOfRange);
  CHECK(error_code([] { make_horodecki33(5.5); }) == Errc::ParamOutOfRange);
  CHECK(error_code([] { make_multi_iso(2, 7, 0.5); }) == Errc::DimensionTooLarge);
  CHECK(error_code([] { make_multi_iso(2, 3, -0.1); }) == Errc::ParamOutOfRange);
}

TEST_CASE("probabilities within 1e-9 of unit sum are renormalized") {
  const auto p = normalized_probabilities<4>({0.7, 0.1, 0.1, 0.1 + 5e-10});
  CHECK(std::abs(p[0] + p[1] + p[2] + p[3] - 1.0) < 1e-15);
}

TEST_CASE("raw specs are validated") {
  const ComplexMat bad(2, 2, {1.0, 0.0, 0.0, 1.0});  // trace 2
  CHECK(error_code([&] { build(RawSpec{{2}, bad}); }) == Errc::RawValidationFailed);
  const ComplexMat half = 0.5 * ComplexMat::identity(2);
  CHECK(error_code([&] { build(RawSpec{{3}, half}); }) == Errc::RawValidationFailed);
  CHECK(build(RawSpec{{2}, half}).dim() == 2);
  CHECK(error_code([] { build(RawSpec{{65}, ComplexMat::identity(65)}); }) ==
        Errc::DimensionTooLarge);
  CHECK(error_code([&] { DensityMatrix(bad, {2}); }) == Errc::InvariantViolation);
}

TEST_CASE("family_name and spec_dims") {
  CHECK(family_name(WernerSpec{3, 0.0}) == "werner");
  CHECK(family_name(MultiIsoSpec{2, 3, 0.1}) == "multi_iso");
  CHECK(spec_dims(MultiIsoSpec{2, 3, 0.1}) == std::vector<std::size_t>{2, 2, 2});
  CHECK(spec_dims(Bd23Spec{}) == std::vector<std::size_t>{2, 3});
}

TEST_CASE("random mixtures of every family are valid") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK_NOTHROW(make_bd22(testing::dirichlet<4>(rng)));
    CHECK_NOTHROW(make_icd(testing::uniform(rng, 0.01, 1.56), testing::dirichlet<4>(rng)));
    CHECK_NOTHROW(make_bd23(testing::dirichlet<6>(rng)));
    CHECK_NOTHROW(make_werner(3, testing::uniform(rng, -1.0, 1.0)));
    CHECK_NOTHROW(make_isotropic(3, testing::uniform(rng, 0.0, 1.0)));
    CHECK_NOTHROW(make_horodecki33(testing::uniform(rng, 2.0, 5.0)));
  }
}
