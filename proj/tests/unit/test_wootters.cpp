#include <cmath>

#include "doctest.h"
#include "lsd/wootters.hpp"
#include "support.hpp"

using namespace lsd;
using lsd::testing::error_code;
using lsd::testing::Rng;

namespace {

void check_invariants(const DensityMatrix& rho, const WoottersData& w, double tol) {
  ComplexMat sum(4, 4);
  double wsum = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    sum += ComplexMat::projector(w.x[i]);
    wsum += w.weights[i];
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx overlap = inner(w.x[i], spin_flip(w.x[j]));
      CHECK(std::abs(overlap - cplx(i == j ? w.lambdas[i] : 0.0)) < tol);
    }
    if (w.k_defined[i]) CHECK(std::abs(w.weights[i] - w.lambdas[i] * w.k[i]) < tol);
  }
  CHECK(distance(sum, rho.mat()) < tol);
  CHECK(std::abs(wsum - 1.0) < tol);
  const auto l = wootters_lambdas(rho);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(l[i] - w.lambdas[i]) < 1e-7);
}

}  // namespace

TEST_CASE("spin flip of |00> is |11>") {
  const ComplexMat zero = ComplexMat::projector(CVec{1.0, 0.0, 0.0, 0.0});
  const ComplexMat one = ComplexMat::projector(CVec{0.0, 0.0, 0.0, 1.0});
  CHECK(distance(spin_flip(DensityMatrix(zero, {2, 2})), one) < 1e-15);
  CHECK(error_code([] { spin_flip(make_bd23({1, 0, 0, 0, 0, 0})); }) == Errc::WrongDims);
}

TEST_CASE("pure state lambdas: only lambda_1 = sin 2 theta survives") {
  const double theta = 0.3;
  const CVec psi{std::cos(theta), 0.0, 0.0, std::sin(theta)};
  const DensityMatrix rho(ComplexMat::projector(psi), {2, 2});
  const auto l = wootters_lambdas(rho);
  CHECK(std::abs(l[0] - 0.5646424733950354) < 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(l[i] < 1e-7);
  CHECK(std::abs(concurrence(rho) - 0.5646424733950354) < 1e-7);
}

TEST_CASE("Bell-diagonal lambdas equal the weights") {
  const auto rho = make_bd22({0.7, 0.1, 0.1, 0.1});
  const auto l = wootters_lambdas(rho);
  CHECK(std::abs(l[0] - 0.7) < 1e-12);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(l[i] - 0.1) < 1e-12);
  CHECK(std::abs(concurrence(rho) - 0.4) < 1e-12);
}

TEST_CASE("Bell-diagonal basis: x_i is sqrt(p_i) times a Bell state, k_i = 1") {
  const std::array<double, 4> p{0.7, 0.1, 0.15, 0.05};
  const auto rho = make_bd22(p);
  const auto w = wootters_basis(rho);
  check_invariants(rho, w, 1e-12);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(w.weights[i] - w.lambdas[i]) < 1e-12);
    CHECK(std::abs(w.k[i] - 1.0) < 1e-12);
  }
  const auto bell = bell_basis_22();
  CHECK(std::abs(std::abs(inner(bell[0], w.x[0])) - std::sqrt(0.7)) < 1e-12);
  CHECK(std::abs(w.concurrence - 0.4) < 1e-12);
}

TEST_CASE("random full-rank states satisfy every basis invariant") {
  Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rho = testing::random_density({2, 2}, rng);
    check_invariants(rho, wootters_basis(rho), 1e-9);
  }
}

TEST_CASE("rank-deficient states") {
  Rng rng(59);
  for (std::size_t rank : {1u, 2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto rho = testing::random_density({2, 2}, rank, rng);
      const auto w = wootters_basis(rho);
      check_invariants(rho, w, 1e-9);
      for (std::size_t i = rank; i < 4; ++i) CHECK(norm(w.x[i]) < 1e-12);
    }
  }
}

TEST_CASE("product state |00> has a degenerate basis") {
  const DensityMatrix rho(ComplexMat::projector(CVec{1.0, 0.0, 0.0, 0.0}), {2, 2});
  CHECK(error_code([&] { wootters_basis(rho); }) == Errc::DegenerateBasis);
  CHECK(concurrence(rho) == 0.0);
}

TEST_CASE("undefined k is flagged when lambda vanishes") {
  // Rank 2, so lambda_3 = lambda_4 = 0.
  const double theta = 0.4;
  const CVec psi{std::cos(theta), 0.0, 0.0, std::sin(theta)};
  const DensityMatrix rho(0.6 * ComplexMat::projector(psi) +
                              0.4 * ComplexMat::projector(CVec{0.0, 1.0, 0.0, 0.0}),
                          {2, 2});
  const auto w = wootters_basis(rho);
  check_invariants(rho, w, 1e-9);
  CHECK(w.k_defined[0]);
  CHECK_FALSE(w.k_defined[3]);
  CHECK(w.k[3] == 0.0);
}
