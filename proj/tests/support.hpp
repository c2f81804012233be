// Random generators shared by the unit and acceptance suites.
#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "lsd/error.hpp"
#include "lsd/matcore.hpp"
#include "lsd/states.hpp"

namespace lsd::testing {

using Rng = std::mt19937_64;

inline ComplexMat ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx{g(rng), g(rng)};
  }
  return m;
}

inline ComplexMat random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMat g = ginibre(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

/// Haar-distributed unitary from Gram-Schmidt on a Ginibre matrix.
inline ComplexMat haar_unitary(std::size_t n, Rng& rng) {
  ComplexMat g = ginibre(n, n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    CVec v = g.column(j);
    for (std::size_t k = 0; k < j; ++k) {
      const CVec u = g.column(k);
      const cplx c = inner(u, v);
      for (std::size_t a = 0; a < n; ++a) v[a] -= c * u[a];
    }
    const double nv = norm(v);
    for (auto& z : v) z /= nv;
    g.set_column(j, v);
  }
  return g;
}

/// G G^dagger / tr for G of shape dim x rank.
inline DensityMatrix random_density(const std::vector<std::size_t>& dims, std::size_t rank,
                                    Rng& rng) {
  std::size_t dim = 1;
  for (auto d : dims) dim *= d;
  const ComplexMat g = ginibre(dim, rank, rng);
  ComplexMat rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(rho, dims);
}

inline DensityMatrix random_density(const std::vector<std::size_t>& dims, Rng& rng) {
  std::size_t dim = 1;
  for (auto d : dims) dim *= d;
  return random_density(dims, dim, rng);
}

template <std::size_t N>
std::array<double, N> dirichlet(Rng& rng, double alpha = 1.0) {
  std::gamma_distribution<double> gamma(alpha, 1.0);
  std::array<double, N> p{};
  double sum = 0.0;
  for (auto& x : p) {
    x = gamma(rng);
    sum += x;
  }
  for (auto& x : p) x /= sum;
  return p;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Error code thrown by fn, or nullopt when it returns normally.
template <class F>
std::optional<Errc> error_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline double max_abs_diff(const ComplexMat& a, const ComplexMat& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return m;
}

}  // namespace lsd::testing
