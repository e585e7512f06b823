#pragma once

#include "qslchan/channel.hpp"

#include <optional>

namespace qslchan {

struct PureBoundQuery {
  ChannelSpec spec;
  BellLikeState state;
  DecayPoint endpoint;  // decay parameter of the final state
};

struct MixedBoundQuery {
  ChannelSpec spec;
  BellLikeState state;
  double tau;    // window start, >= 0
  double tau_d;  // driving time, > 0
};

struct QsltResult {
  double numerator = 0.0;    // geometric distance term
  double denominator = 0.0;  // averaged speed term (operator-norm route)
  double value = 0.0;        // tau_QSL/tau (pure) or tau_QSL (mixed)
  bool stationary = false;

  // Schatten-norm path integrals for l = 1, 2, inf (pure bound only).
  double path_l1 = 0.0;
  double path_l2 = 0.0;
  double path_linf = 0.0;
};

/// Pure-state bound: |Tr(rho0 rho_end) - 1| over the integrated largest
/// singular value of d(rho)/dt, evaluated in the decay-parameter domain.
/// The result depends only on the endpoint, not on rate and tau separately.
QsltResult qslt_pure_ratio(const PureBoundQuery& q,
                           double quad_tol = 1e-9, int quad_depth = 40);

/// Mixed-state relative-purity bound over the window [tau, tau + tau_d].
QsltResult qslt_mixed(const MixedBoundQuery& q,
                      double quad_tol = 1e-9, int quad_depth = 40);

/// Closed-form ratio where one exists: C for PD, sqrt(1-C^2) for fully
/// correlated Depol. Absent otherwise.
std::optional<double> oracle_ratio(const ChannelSpec& spec, const BellLikeState& s,
                                   DecayPoint endpoint);

}  // namespace qslchan
