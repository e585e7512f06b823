#pragma once

#include "qslchan/state.hpp"

#include <string>
#include <vector>

namespace qslchan {

enum class Family { AD, PD, Depol };

Family family_from_string(const std::string& name);
std::string to_string(Family f);

/// Default rate conventions: Gamma = 1 for AD, gamma = 1/2 for PD/Depol.
double default_rate(Family f);

struct ChannelSpec {
  Family family;
  double mu;    // correlation strength in [0,1]
  double rate;  // decay rate, > 0

  ChannelSpec(Family f, double mu_, double rate_);
  ChannelSpec(Family f, double mu_) : ChannelSpec(f, mu_, default_rate(f)) {}
};

/// Decay parameter P = exp(-Gamma t) (AD) or p = exp(-gamma t) (PD/Depol).
/// Open at 0: the exponential never reaches 0 at finite time.
struct DecayPoint {
  double value;
  explicit DecayPoint(double v);
};

/// One single-qubit Kraus operator with its probability already folded in.
struct SingleQubitKraus {
  CMat op;       // 2x2, probability weight included
  int label;     // Pauli / branch index
};

std::vector<SingleQubitKraus> single_qubit_kraus(Family f, DecayPoint decay);

/// Two-qubit Kraus set for one correlated channel use. The uncorrelated and
/// fully correlated branches are concatenated with weights sqrt(1-mu) and
/// sqrt(mu) folded into the operators.
struct KrausSet {
  struct Entry {
    CMat op;  // 4x4
    int i1;   // first-use label
    int i2;   // second-use label (== i1 for the correlated branch)
    bool correlated;
  };
  std::vector<Entry> operators;

  /// Frobenius norm of sum(E^dag E) - I.
  double completeness_defect() const;
};

KrausSet correlated_kraus(const ChannelSpec& spec, DecayPoint decay);

/// rho = sum_k E_k rho0 E_k^dag. Checks completeness first.
DensityMatrix apply(const KrausSet& kraus, const DensityMatrix& rho0);

/// Evolved state of a Bell-like input, from the closed-form matrix elements.
DensityMatrix evolved_closed_form(const ChannelSpec& spec, const BellLikeState& s,
                                  DecayPoint decay);

/// Entrywise analytic derivative of the closed-form state with respect to the
/// decay parameter. For AD with mu > 0 the coherence term carries
/// mu*alpha*beta/(2*sqrt(P)), so decay -> 0 is a singular point.
CMat d_rho_d_decay(const ChannelSpec& spec, const BellLikeState& s, DecayPoint decay);

}  // namespace qslchan
