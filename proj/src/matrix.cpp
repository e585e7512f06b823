#include "qslchan/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace qslchan {

namespace {

void check_shape(int rows, int cols) {
  if (!((rows == 2 && cols == 2) || (rows == 4 && cols == 4))) {
    throw std::invalid_argument("CMat: only 2x2 and 4x4 shapes are supported");
  }
}

Eigen::MatrixXcd to_eigen(const CMat& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

}  // namespace

CMat::CMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  check_shape(rows, cols);
}

CMat::CMat(int rows, int cols, std::initializer_list<Complex> entries) : CMat(rows, cols) {
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw std::invalid_argument("CMat: entry count does not match shape");
  }
  std::copy(entries.begin(), entries.end(), data_.begin());
}

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMat CMat::zero(int n) { return CMat(n, n); }

CMat CMat::operator+(const CMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMat: shape mismatch");
  CMat r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
  return r;
}

CMat CMat::operator-(const CMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMat: shape mismatch");
  CMat r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
  return r;
}

CMat CMat::operator*(const CMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("CMat: shape mismatch");
  CMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == 0.0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

CMat CMat::operator*(Complex s) const {
  CMat r(rows_, cols_);
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
  return r;
}

CMat CMat::operator*(double s) const { return (*this) * Complex(s, 0.0); }

CMat CMat::adjoint() const {
  CMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex CMat::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double CMat::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMat::all_finite() const {
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double CMat::hermiticity_defect() const {
  double d = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  return d;
}

double CMat::max_abs_diff(const CMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("CMat: shape mismatch");
  double d = 0.0;
  for (size_t k = 0; k < data_.size(); ++k) d = std::max(d, std::abs(data_[k] - o.data_[k]));
  return d;
}

CMat kron(const CMat& a, const CMat& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw std::invalid_argument("kron: both factors must be 2x2");
  }
  CMat r(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

Complex mat_trace_product(const CMat& a, const CMat& b) {
  if (a.rows() != 4 || b.rows() != 4) throw std::invalid_argument("mat_trace_product: expected 4x4");
  Complex t = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) t += a(i, k) * b(k, i);
  return t;
}

std::vector<double> singular_values(const CMat& m) {
  if (!m.all_finite()) throw std::domain_error("singular_values: non-finite entries");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> eig_hermitian(const CMat& m, double herm_tol) {
  if (!m.all_finite()) throw std::domain_error("eig_hermitian: non-finite entries");
  if (m.hermiticity_defect() > herm_tol) {
    throw std::invalid_argument("eig_hermitian: input is not Hermitian within tolerance");
  }
  Eigen::MatrixXcd e = to_eigen(m);
  e = 0.5 * (e + e.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace qslchan
