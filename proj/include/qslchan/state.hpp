#pragma once

#include "qslchan/matrix.hpp"

namespace qslchan {

/// Bell-like pure state a|00> + b|11> with real nonnegative amplitudes.
struct BellLikeState {
  double alpha;
  double beta;

  explicit BellLikeState(double a);

  /// C = 2*alpha*beta.
  double concurrence() const { return 2.0 * alpha * beta; }
};

/// Inverse of C = 2ab on the alpha <= sqrt(2)/2 branch.
BellLikeState state_from_concurrence(double c);

/// 4x4 two-qubit density matrix. Basis order |00>, |01>, |10>, |11>.
struct DensityMatrix {
  CMat m;

  explicit DensityMatrix(CMat mat);

  double purity() const;
  double min_eigenvalue() const;
};

DensityMatrix bell_like_density(const BellLikeState& s);

/// sin^2 of the Bures angle, |Tr(rho0*rho_tau) - 1|. Requires rho0 pure.
double bures_sin2(const DensityMatrix& rho0, const DensityMatrix& rho_tau);

/// Tr(rho_b*rho_a)/Tr(rho_a^2).
double relative_purity(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

}  // namespace qslchan
