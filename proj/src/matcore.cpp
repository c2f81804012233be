// SPDX-License-Identifier: Apache-2.0
#include "lsd/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lsd/error.hpp"

namespace lsd {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiOffTol = 1e-14;
constexpr double kHermTol = 1e-12;

void require_same_shape(const ComplexMat& a, const ComplexMat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()));
  }
}

void require_square(const ComplexMat& a, const char* what) {
  if (!a.is_square()) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": matrix is not square");
  }
}

}  // namespace

ComplexMat::ComplexMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMat::ComplexMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(Errc::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                             " does not match " + std::to_string(rows_) + "x" +
                                             std::to_string(cols_));
  }
  if (!all_finite()) throw Error(Errc::ParamOutOfRange, "matrix has non-finite entries");
}

ComplexMat ComplexMat::identity(std::size_t n) {
  ComplexMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMat ComplexMat::diagonal(std::span<const double> d) {
  ComplexMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMat ComplexMat::outer(std::span<const cplx> u, std::span<const cplx> v) {
  ComplexMat m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  }
  return m;
}

ComplexMat ComplexMat::projector(std::span<const cplx> u) { return outer(u, u); }

CVec ComplexMat::column(std::size_t j) const {
  CVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMat::set_column(std::size_t j, std::span<const cplx> v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

ComplexMat ComplexMat::adjoint() const {
  ComplexMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

ComplexMat ComplexMat::transpose() const {
  ComplexMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

ComplexMat ComplexMat::conj() const {
  ComplexMat m = *this;
  for (auto& z : m.data_) z = std::conj(z);
  return m;
}

cplx ComplexMat::trace() const {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMat::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMat::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMat& ComplexMat::operator+=(const ComplexMat& rhs) {
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMat& ComplexMat::operator-=(const ComplexMat& rhs) {
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMat& ComplexMat::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMat operator+(ComplexMat lhs, const ComplexMat& rhs) { return lhs += rhs; }
ComplexMat operator-(ComplexMat lhs, const ComplexMat& rhs) { return lhs -= rhs; }
ComplexMat operator*(cplx s, ComplexMat m) { return m *= s; }
ComplexMat operator*(ComplexMat m, cplx s) { return m *= s; }

ComplexMat operator*(const ComplexMat& lhs, const ComplexMat& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(Errc::DimensionMismatch, "matrix product: inner dimensions differ");
  }
  ComplexMat out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cplx a = lhs(i, k);
      if (a == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

CVec operator*(const ComplexMat& m, std::span<const cplx> v) {
  if (m.cols() != v.size()) {
    throw Error(Errc::DimensionMismatch, "matrix-vector product: dimensions differ");
  }
  CVec out(m.rows(), cplx{0.0, 0.0});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  }
  return out;
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw Error(Errc::DimensionMismatch, "inner product");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm(std::span<const cplx> v) { return std::sqrt(std::real(inner(v, v))); }

double distance(const ComplexMat& a, const ComplexMat& b) { return (a - b).frobenius_norm(); }

bool is_hermitian(const ComplexMat& a, double rel_tol) {
  if (!a.is_square()) return false;
  return distance(a, a.adjoint()) <= rel_tol * a.frobenius_norm();
}

EigenResult hermitian_eig(const ComplexMat& input) {
  require_square(input, "hermitian_eig");
  if (!is_hermitian(input, kHermTol)) {
    throw Error(Errc::NotHermitian, "hermitian_eig: ||A - A^dagger||_F exceeds tolerance");
  }
  const std::size_t n = input.rows();
  ComplexMat a = input;
  ComplexMat v = ComplexMat::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double scale = input.frobenius_norm();
  bool converged = false;
  for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (p != q) off += std::norm(a(p, q));
      }
    }
    if (std::sqrt(off) <= kJacobiOffTol * scale) {
      converged = true;
      break;
    }
    if (sweep == kMaxSweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx phase_conj = std::conj(apq / mag);
        // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
        const cplx gpp = c;
        const cplx gpq = s;
        const cplx gqp = -s * phase_conj;
        const cplx gqq = c * phase_conj;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  if (!converged) {
    throw Error(Errc::NoConvergence, "hermitian_eig: Jacobi sweep cap reached");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  EigenResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMat(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMat& a) {
  return hermitian_eig(a).eigenvalues;
}

double min_eigenvalue(const ComplexMat& a) {
  const auto ev = hermitian_eigenvalues(a);
  return ev.empty() ? 0.0 : ev.front();
}

ComplexMat kron(const ComplexMat& a, const ComplexMat& b) {
  ComplexMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMat partial_transpose(const ComplexMat& rho, std::size_t dim_a, std::size_t dim_b,
                             Subsystem which) {
  const std::size_t n = dim_a * dim_b;
  if (!rho.is_square() || rho.rows() != n) {
    throw Error(Errc::DimensionMismatch, "partial_transpose: matrix is not " +
                                             std::to_string(n) + "x" + std::to_string(n));
  }
  ComplexMat out(n, n);
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t b = 0; b < dim_b; ++b) {
      for (std::size_t a2 = 0; a2 < dim_a; ++a2) {
        for (std::size_t b2 = 0; b2 < dim_b; ++b2) {
          const std::size_t row = a * dim_b + b;
          const std::size_t col = a2 * dim_b + b2;
          if (which == Subsystem::B) {
            out(row, col) = rho(a * dim_b + b2, a2 * dim_b + b);
          } else {
            out(row, col) = rho(a2 * dim_b + b, a * dim_b + b2);
          }
        }
      }
    }
  }
  return out;
}

bool is_psd(const ComplexMat& a, double tol) {
  if (a.empty()) return true;
  return min_eigenvalue(a) >= -tol * std::max(1.0, a.frobenius_norm());
}

ComplexMat pinv_sqrt(const ComplexMat& a, double tol) {
  const auto eig = hermitian_eig(a);
  const std::size_t n = a.rows();
  ComplexMat out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = eig.eigenvalues[k];
    if (lam < -tol) {
      throw Error(Errc::NotPSD, "pinv_sqrt: eigenvalue " + std::to_string(lam) + " below -tol");
    }
    if (lam <= tol) continue;
    const double w = 1.0 / std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vi = eig.eigenvectors(i, k) * w;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

ComplexMat psd_sqrt(const ComplexMat& a) {
  const auto eig = hermitian_eig(a);
  const std::size_t n = a.rows();
  ComplexMat out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = eig.eigenvalues[k];
    if (lam <= 0.0) continue;
    const double w = std::sqrt(lam);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vi = eig.eigenvectors(i, k) * w;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out;
}

TakagiResult takagi_factorize(const ComplexMat& s) {
  require_square(s, "takagi_factorize");
  const double scale = s.frobenius_norm();
  if (distance(s, s.transpose()) > kHermTol * std::max(scale, 1e-300)) {
    throw Error(Errc::NotSymmetric, "takagi_factorize: S != S^T");
  }
  const std::size_t n = s.rows();

  // For an eigenpair M [x; y] = sigma [x; y] with sigma >= 0, v = x + i y
  // satisfies S conj(v) = sigma v.
  ComplexMat m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = 0.5 * (s(i, j).real() + s(j, i).real());
      const double im = 0.5 * (s(i, j).imag() + s(j, i).imag());
      m(i, j) = re;
      m(i, j + n) = im;
      m(i + n, j) = im;
      m(i + n, j + n) = -re;
    }
  }
  const auto eig = hermitian_eig(m);

  // Largest n eigenvalues, descending; pairs (+sigma, -sigma) near zero can
  // both land in this set, so keep only vectors that are new after complex
  // Gram-Schmidt and complete the basis afterwards.
  std::vector<CVec> basis;
  for (std::size_t k = 0; k < 2 * n && basis.size() < n; ++k) {
    const std::size_t idx = 2 * n - 1 - k;
    CVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = cplx(eig.eigenvectors(i, idx).real(), eig.eigenvectors(i + n, idx).real());
    }
    for (const auto& b : basis) {
      const cplx c = inner(b, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * b[i];
    }
    const double nv = norm(v);
    if (nv < 0.5) continue;
    for (auto& z : v) z /= nv;
    basis.push_back(std::move(v));
  }
  for (std::size_t e = 0; e < n && basis.size() < n; ++e) {
    CVec v(n, cplx{0.0, 0.0});
    v[e] = 1.0;
    for (const auto& b : basis) {
      const cplx c = inner(b, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= c * b[i];
    }
    const double nv = norm(v);
    if (nv < 1e-6) continue;
    for (auto& z : v) z /= nv;
    basis.push_back(std::move(v));
  }

  // U = V^dagger, so row k of U is conj(v_k).
  ComplexMat u(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) u(k, i) = std::conj(basis[k][i]);
  }
  ComplexMat d = u * s * u.transpose();
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx dk = d(k, k);
    values[k] = std::abs(dk);
    if (values[k] > 0.0) {
      const cplx fix = std::polar(1.0, -0.5 * std::arg(dk));
      for (std::size_t i = 0; i < n; ++i) u(k, i) *= fix;
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] > values[j]; });
  TakagiResult out;
  out.unitary = ComplexMat(n, n);
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = values[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.unitary(k, i) = u(order[k], i);
  }

  const ComplexMat residual =
      out.unitary * s * out.unitary.transpose() - ComplexMat::diagonal(out.values);
  if (residual.frobenius_norm() > 1e-9 * std::max(scale, 1e-300) && scale > 0.0) {
    throw Error(Errc::NoConvergence, "takagi_factorize: residual exceeds 1e-9 ||S||_F");
  }
  return out;
}

namespace pauli {
ComplexMat x() { return ComplexMat(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMat y() { return ComplexMat(2, 2, {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}); }
ComplexMat z() { return ComplexMat(2, 2, {1.0, 0.0, 0.0, -1.0}); }
}  // namespace pauli

ComplexMat flip_operator(std::size_t d) {
  ComplexMat f(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  }
  return f;
}

}  // namespace lsd
