#include <algorithm>
#include <cmath>
#include <functional>

#include "doctest.h"
#include "lsd/error.hpp"
#include "lsd/matcore.hpp"
#include "support.hpp"

using namespace lsd;
using lsd::testing::error_code;
using lsd::testing::Rng;

TEST_CASE("hermitian_eig: pauli y") {
  const auto ev = hermitian_eigenvalues(pauli::y());
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("hermitian_eig: fixed 3x3 fixture") {
  const cplx i{0.0, 1.0};
  const ComplexMat h(3, 3, {2.0, 1.0 - i, 0.5 * i, 1.0 + i, -1.0, 0.25, -0.5 * i, 0.25, 3.0});
  const auto r = hermitian_eig(h);
  const double expected[] = {-1.5941934784230627, 2.3301669712925137, 3.2640265071305476};
  for (int k = 0; k < 3; ++k) CHECK(std::abs(r.eigenvalues[k] - expected[k]) < 1e-12);
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality on random matrices") {
  Rng rng(11);
  for (std::size_t n : {1u, 2u, 4u, 6u, 9u, 16u}) {
    const ComplexMat a = testing::random_hermitian(n, rng);
    const auto r = hermitian_eig(a);
    const ComplexMat& v = r.eigenvectors;
    const ComplexMat back = v * ComplexMat::diagonal(r.eigenvalues) * v.adjoint();
    CHECK(distance(back, a) < 1e-11 * a.frobenius_norm());
    CHECK(distance(v.adjoint() * v, ComplexMat::identity(n)) < 1e-12);
    for (std::size_t k = 1; k < n; ++k) CHECK(r.eigenvalues[k - 1] <= r.eigenvalues[k]);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  const ComplexMat a(2, 2, {1.0, 2.0, 0.0, 1.0});
  CHECK(error_code([&] { hermitian_eig(a); }) == Errc::NotHermitian);
  CHECK(error_code([&] { hermitian_eig(ComplexMat(2, 3)); }) == Errc::DimensionMismatch);
}

TEST_CASE("constructor validates size and finiteness") {
  CHECK(error_code([] { ComplexMat(2, 2, {1.0, 2.0}); }) == Errc::DimensionMismatch);
  CHECK(error_code([] { ComplexMat(1, 1, {std::nan("")}); }) == Errc::ParamOutOfRange);
}

TEST_CASE("kron: sigma_z (x) sigma_z is diag(1,-1,-1,1)") {
  const ComplexMat zz = kron(pauli::z(), pauli::z());
  const double d[] = {1, -1, -1, 1};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(zz(i, j) == cplx{i == j ? d[i] : 0.0, 0.0});
  }
}

TEST_CASE("kron is associative and mixed-product compatible") {
  Rng rng(3);
  const auto a = testing::ginibre(2, 2, rng);
  const auto b = testing::ginibre(3, 3, rng);
  const auto c = testing::ginibre(2, 2, rng);
  const auto d = testing::ginibre(3, 3, rng);
  CHECK(distance(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-12);
  CHECK(distance(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-11);
}

TEST_CASE("partial_transpose: singlet minimum eigenvalue is -1/2") {
  const double s = 1.0 / std::sqrt(2.0);
  const CVec psi{0.0, s, -s, 0.0};
  const double mu = min_eigenvalue(partial_transpose(ComplexMat::projector(psi), 2, 2));
  CHECK(std::abs(mu + 0.5) < 1e-14);
}

TEST_CASE("partial_transpose properties") {
  Rng rng(5);
  for (auto [da, db] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const ComplexMat a = testing::ginibre(da * db, da * db, rng);
    const ComplexMat pb = partial_transpose(a, da, db, Subsystem::B);
    const ComplexMat pa = partial_transpose(a, da, db, Subsystem::A);
    CHECK(distance(partial_transpose(pb, da, db), a) < 1e-14);
    // PT_A and PT_B differ by a full transpose.
    CHECK(distance(pa, pb.transpose()) < 1e-14);
    CHECK(std::abs(pb.trace() - a.trace()) < 1e-13);
  }
  // Product operators: (A (x) B)^{T_B} = A (x) B^T.
  const auto a = testing::ginibre(2, 2, rng);
  const auto b = testing::ginibre(3, 3, rng);
  CHECK(distance(partial_transpose(kron(a, b), 2, 3), kron(a, b.transpose())) < 1e-14);
  CHECK(error_code([&] { partial_transpose(a, 3, 2); }) == Errc::DimensionMismatch);
}

TEST_CASE("is_psd and pinv_sqrt on a rank-deficient PSD matrix") {
  Rng rng(7);
  const auto b = testing::ginibre(2, 3, rng);
  const ComplexMat a = b.adjoint() * b;  // 3x3, rank 2
  CHECK(is_psd(a));
  const ComplexMat r = pinv_sqrt(a);
  // r a r is the projector onto the support of a.
  const ComplexMat p = r * a * r;
  CHECK(distance(p * p, p) < 1e-9);
  CHECK(std::abs(p.trace().real() - 2.0) < 1e-9);
  CHECK(distance(a * p, a) < 1e-9);
  const ComplexMat s = psd_sqrt(a);
  CHECK(distance(s * s, a) < 1e-10 * a.frobenius_norm());
  CHECK_FALSE(is_psd(pauli::z()));
  CHECK(error_code([] { pinv_sqrt(pauli::z()); }) == Errc::NotPSD);
}

TEST_CASE("takagi: fixed symmetric fixture") {
  const cplx i{0.0, 1.0};
  const ComplexMat s(3, 3, {1.0 + 2.0 * i, 0.5 - i, 0.3, 0.5 - i, -2.0 + 0.1 * i, i, 0.3, i, 0.7});
  const auto t = takagi_factorize(s);
  const double expected[] = {3.3465135679763445, 1.7207979207027926, 0.1403618732248429};
  for (int k = 0; k < 3; ++k) CHECK(std::abs(t.values[k] - expected[k]) < 1e-12);
  const ComplexMat d = t.unitary * s * t.unitary.transpose();
  CHECK(distance(d, ComplexMat::diagonal(t.values)) < 1e-12);
}

TEST_CASE("takagi: construct-then-recover round trip") {
  Rng rng(13);
  for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const ComplexMat v = testing::haar_unitary(n, rng);
      std::vector<double> d0(n);
      for (auto& x : d0) x = testing::uniform(rng, 0.0, 2.0);
      if (trial % 5 == 0 && n > 1) d0[0] = d0[1];  // degenerate
      if (trial % 7 == 0) d0[n - 1] = 0.0;          // singular
      const ComplexMat s = v.transpose() * ComplexMat::diagonal(d0) * v;
      const auto t = takagi_factorize(s);
      std::sort(d0.begin(), d0.end(), std::greater<>());
      for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(t.values[k] - d0[k]) < 1e-10);
      CHECK(distance(t.unitary * t.unitary.adjoint(), ComplexMat::identity(n)) < 1e-10);
      CHECK(distance(t.unitary * s * t.unitary.transpose(), ComplexMat::diagonal(t.values)) <
            1e-10);
    }
  }
}

TEST_CASE("takagi rejects non-symmetric input") {
  const ComplexMat a(2, 2, {1.0, 2.0, 3.0, 1.0});
  CHECK(error_code([&] { takagi_factorize(a); }) == Errc::NotSymmetric);
}

TEST_CASE("flip_operator swaps tensor factors") {
  const CVec u{cplx{0.3, 0.1}, cplx{-0.2, 0.5}, cplx{0.7, 0.0}};
  const CVec w{cplx{0.1, -0.4}, cplx{0.6, 0.2}, cplx{-0.3, 0.3}};
  const ComplexMat uw = kron(ComplexMat(3, 1, u), ComplexMat(3, 1, w));
  const ComplexMat wu = kron(ComplexMat(3, 1, w), ComplexMat(3, 1, u));
  CHECK(distance(flip_operator(3) * uw, wu) < 1e-15);
  CHECK(distance(flip_operator(3) * flip_operator(3), ComplexMat::identity(9)) < 1e-15);
}
