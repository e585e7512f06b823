#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qslchan {

using Complex = std::complex<double>;

/// Dense complex matrix restricted to the 2x2 and 4x4 shapes used by the
/// two-qubit channel model. Row-major storage, value semantics.
class CMat {
public:
  CMat() = default;
  CMat(int rows, int cols);
  CMat(int rows, int cols, std::initializer_list<Complex> entries);

  static CMat identity(int n);
  static CMat zero(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const Complex& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  CMat operator+(const CMat& o) const;
  CMat operator-(const CMat& o) const;
  CMat operator*(const CMat& o) const;
  CMat operator*(Complex s) const;
  CMat operator*(double s) const;

  CMat adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// Max absolute deviation from the Hermitian part.
  double hermiticity_defect() const;

  double max_abs_diff(const CMat& o) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product of two 2x2 matrices.
CMat kron(const CMat& a, const CMat& b);

/// Tr(a*b) without forming the product.
Complex mat_trace_product(const CMat& a, const CMat& b);

/// Singular values, descending. Deterministic (one-sided Jacobi).
std::vector<double> singular_values(const CMat& m);

/// Eigenvalues of a Hermitian matrix, descending. The input is symmetrized
/// when its defect is within `herm_tol`; a larger defect is a contract error.
std::vector<double> eig_hermitian(const CMat& m, double herm_tol = 1e-10);

}  // namespace qslchan
