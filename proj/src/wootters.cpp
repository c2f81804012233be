// SPDX-License-Identifier: Apache-2.0
#include "lsd/wootters.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lsd/error.hpp"

namespace lsd {

namespace {

constexpr double kSupportTol = 1e-12;
constexpr double kLambdaTol = 1e-14;

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(Errc::WrongDims, "spin-flip quantities are defined for 2x2 states only");
  }
}

ComplexMat hermitian_part(const ComplexMat& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace

ComplexMat spin_flip_operator() { return kron(pauli::y(), pauli::y()); }

ComplexMat spin_flip(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const ComplexMat yy = spin_flip_operator();
  return yy * rho.mat().conj() * yy;
}

CVec spin_flip(std::span<const cplx> x) {
  CVec xc(x.begin(), x.end());
  for (auto& z : xc) z = std::conj(z);
  return spin_flip_operator() * std::span<const cplx>(xc);
}

std::array<double, 4> wootters_lambdas(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const ComplexMat root = psd_sqrt(rho.mat());
  const auto ev = hermitian_eigenvalues(hermitian_part(root * spin_flip(rho) * root));
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = std::sqrt(std::max(ev[3 - i], 0.0));
  return out;
}

double concurrence(const DensityMatrix& rho) {
  const auto l = wootters_lambdas(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

WoottersData wootters_basis(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const auto eig = hermitian_eig(rho.mat());
  const double top = std::max(eig.eigenvalues.back(), 0.0);

  // Subnormalized eigenvectors spanning the support, largest first.
  std::vector<CVec> support;
  for (std::size_t k = 4; k-- > 0;) {
    const double mu = eig.eigenvalues[k];
    if (mu <= kSupportTol * std::max(top, 1.0)) break;
    CVec v = eig.eigenvectors.column(k);
    for (auto& z : v) z *= std::sqrt(mu);
    support.push_back(std::move(v));
  }
  const std::size_t r = support.size();
  if (r == 0) throw Error(Errc::DegenerateBasis, "state has empty support");

  std::vector<CVec> flipped;
  flipped.reserve(r);
  for (const auto& v : support) flipped.push_back(spin_flip(v));
  ComplexMat tau(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) tau(i, j) = inner(support[i], flipped[j]);
  }
  // tau is symmetric up to round-off; symmetrize before factorizing.
  tau = 0.5 * (tau + tau.transpose());
  const auto takagi = takagi_factorize(tau);

  WoottersData out{};
  for (std::size_t i = 0; i < 4; ++i) {
    out.x[i] = CVec(4, cplx{0.0, 0.0});
    out.x_prime[i] = CVec(4, cplx{0.0, 0.0});
    out.lambdas[i] = i < r ? takagi.values[i] : 0.0;
  }
  // x_i = sum_j conj(U_ij) v_j
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const cplx c = std::conj(takagi.unitary(i, j));
      for (std::size_t a = 0; a < 4; ++a) out.x[i][a] += c * support[j][a];
    }
  }
  if (out.lambdas[0] <= kLambdaTol) {
    throw Error(Errc::DegenerateBasis, "lambda_1 vanishes; rho rho~ is identically zero");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const double nx = std::real(inner(out.x[i], out.x[i]));
    out.weights[i] = nx;
    out.k_defined[i] = out.lambdas[i] > kLambdaTol;
    if (out.k_defined[i]) {
      const double scale = 1.0 / std::sqrt(out.lambdas[i]);
      for (std::size_t a = 0; a < 4; ++a) out.x_prime[i][a] = out.x[i][a] * scale;
      out.k[i] = nx / out.lambdas[i];
    } else {
      out.k[i] = 0.0;
    }
  }
  const auto& l = out.lambdas;
  out.concurrence = std::max(0.0, l[0] - l[1] - l[2] - l[3]);
  return out;
}

}  // namespace lsd
