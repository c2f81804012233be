// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra for the small matrices that appear in
// bipartite and few-party density-matrix work (dimension <= 64).
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lsd {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Row-major dense complex matrix with value semantics.
class ComplexMat {
 public:
  ComplexMat() = default;
  /// Zero matrix.
  ComplexMat(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch if the entry count is wrong, ParamOutOfRange on
  /// non-finite entries.
  ComplexMat(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMat identity(std::size_t n);
  static ComplexMat diagonal(std::span<const double> d);
  /// |u><v|
  static ComplexMat outer(std::span<const cplx> u, std::span<const cplx> v);
  /// |u><u|
  static ComplexMat projector(std::span<const cplx> u);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const cplx> entries() const noexcept { return data_; }

  CVec column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const cplx> v);

  ComplexMat adjoint() const;
  ComplexMat transpose() const;
  ComplexMat conj() const;

  cplx trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  ComplexMat& operator+=(const ComplexMat& rhs);
  ComplexMat& operator-=(const ComplexMat& rhs);
  ComplexMat& operator*=(cplx s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMat operator+(ComplexMat lhs, const ComplexMat& rhs);
ComplexMat operator-(ComplexMat lhs, const ComplexMat& rhs);
ComplexMat operator*(const ComplexMat& lhs, const ComplexMat& rhs);
ComplexMat operator*(cplx s, ComplexMat m);
ComplexMat operator*(ComplexMat m, cplx s);
CVec operator*(const ComplexMat& m, std::span<const cplx> v);

/// <u|v>
cplx inner(std::span<const cplx> u, std::span<const cplx> v);
double norm(std::span<const cplx> v);

/// ||A - B||_F
double distance(const ComplexMat& a, const ComplexMat& b);
/// ||A - A^dagger||_F <= rel_tol * ||A||_F
bool is_hermitian(const ComplexMat& a, double rel_tol = 1e-12);

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMat eigenvectors;          // columns, orthonormal
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws NotHermitian when ||A - A^dagger||_F > 1e-12 ||A||_F and
/// NoConvergence after 100 sweeps.
EigenResult hermitian_eig(const ComplexMat& a);
/// Eigenvalues only (ascending); same preconditions as hermitian_eig.
std::vector<double> hermitian_eigenvalues(const ComplexMat& a);
double min_eigenvalue(const ComplexMat& a);

/// (A (x) B)[(i rB + k), (j cB + l)] = A[i,j] B[k,l]
ComplexMat kron(const ComplexMat& a, const ComplexMat& b);

enum class Subsystem { A, B };

/// Partial transpose of an operator on C^dA (x) C^dB.
ComplexMat partial_transpose(const ComplexMat& rho, std::size_t dim_a, std::size_t dim_b,
                             Subsystem which = Subsystem::B);

/// min eigenvalue >= -tol * max(1, ||A||_F)
bool is_psd(const ComplexMat& a, double tol = 1e-9);

/// A^(-1/2) restricted to the support of A; eigenvalues <= tol count as zero.
/// Throws NotPSD when an eigenvalue is below -tol.
ComplexMat pinv_sqrt(const ComplexMat& a, double tol = 1e-12);
/// Principal square root of a PSD matrix (negative round-off clamped to zero).
ComplexMat psd_sqrt(const ComplexMat& a);

struct TakagiResult {
  ComplexMat unitary;              // U with U S U^T = diag(values)
  std::vector<double> values;      // nonnegative, descending
};

/// Takagi factorization of a complex symmetric matrix via the real symmetric
/// embedding [[Re S, Im S], [Im S, -Re S]]. Throws NotSymmetric or
/// NoConvergence (when the residual exceeds 1e-9 ||S||_F).
TakagiResult takagi_factorize(const ComplexMat& s);

namespace pauli {
ComplexMat x();
ComplexMat y();
ComplexMat z();
}  // namespace pauli

/// Swap operator F = sum_ij |ij><ji| on C^d (x) C^d.
ComplexMat flip_operator(std::size_t d);

}  // namespace lsd
