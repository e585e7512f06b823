#include "qslchan/state.hpp"

#include <cmath>
#include <stdexcept>

namespace qslchan {

BellLikeState::BellLikeState(double a) : alpha(a), beta(0.0) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw std::domain_error("BellLikeState: alpha must lie in [0,1]");
  }
  beta = std::sqrt(1.0 - a * a);
}

BellLikeState state_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::domain_error("state_from_concurrence: C must lie in [0,1]");
  }
  return BellLikeState(std::sqrt((1.0 - std::sqrt(1.0 - c * c)) / 2.0));
}

DensityMatrix::DensityMatrix(CMat mat) : m(std::move(mat)) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("DensityMatrix: expected 4x4");
  }
  if (m.hermiticity_defect() > 1e-10) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-10");
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 beyond 1e-10");
  }
  if (min_eigenvalue() < -1e-9) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
  }
}

double DensityMatrix::purity() const { return mat_trace_product(m, m).real(); }

double DensityMatrix::min_eigenvalue() const {
  auto ev = eig_hermitian(m);
  return ev.back();
}

DensityMatrix bell_like_density(const BellLikeState& s) {
  CMat m(4, 4);
  m(0, 0) = s.alpha * s.alpha;
  m(3, 3) = s.beta * s.beta;
  m(0, 3) = m(3, 0) = s.alpha * s.beta;
  return DensityMatrix(std::move(m));
}

double bures_sin2(const DensityMatrix& rho0, const DensityMatrix& rho_tau) {
  if (std::abs(rho0.purity() - 1.0) > 1e-8) {
    throw std::invalid_argument("bures_sin2: rho0 must be pure; use the mixed-state bound");
  }
  return std::abs(mat_trace_product(rho0.m, rho_tau.m).real() - 1.0);
}

double relative_purity(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  const double pa = rho_a.purity();
  if (!(pa > 0.0)) throw std::domain_error("relative_purity: zero-purity input");
  return mat_trace_product(rho_b.m, rho_a.m).real() / pa;
}

}  // namespace qslchan
