#include "qslchan/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qslchan {

namespace {

const Complex kI(0.0, 1.0);

CMat pauli(int i) {
  switch (i) {
    case 0: return CMat::identity(2);
    case 1: return CMat(2, 2, {0.0, 1.0, 1.0, 0.0});
    case 2: return CMat(2, 2, {0.0, -kI, kI, 0.0});
    case 3: return CMat(2, 2, {1.0, 0.0, 0.0, -1.0});
  }
  throw std::invalid_argument("pauli: index out of range");
}

}  // namespace

Family family_from_string(const std::string& name) {
  if (name == "ad") return Family::AD;
  if (name == "pd") return Family::PD;
  if (name == "depol") return Family::Depol;
  throw std::invalid_argument("unknown channel family: " + name);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::AD: return "ad";
    case Family::PD: return "pd";
    case Family::Depol: return "depol";
  }
  return "?";
}

double default_rate(Family f) { return f == Family::AD ? 1.0 : 0.5; }

ChannelSpec::ChannelSpec(Family f, double mu_, double rate_) : family(f), mu(mu_), rate(rate_) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("ChannelSpec: mu must lie in [0,1]");
  if (!(rate > 0.0)) throw std::domain_error("ChannelSpec: rate must be positive");
}

DecayPoint::DecayPoint(double v) : value(v) {
  if (!(v > 0.0 && v <= 1.0)) throw std::domain_error("DecayPoint: value must lie in (0,1]");
}

std::vector<SingleQubitKraus> single_qubit_kraus(Family f, DecayPoint decay) {
  const double u = decay.value;
  std::vector<SingleQubitKraus> out;
  switch (f) {
    case Family::AD: {
      CMat b0(2, 2, {1.0, 0.0, 0.0, std::sqrt(u)});
      CMat b1(2, 2, {0.0, std::sqrt(1.0 - u), 0.0, 0.0});
      out.push_back({std::move(b0), 0});
      out.push_back({std::move(b1), 1});
      break;
    }
    case Family::PD: {
      const double p0 = (1.0 + u) / 2.0;
      const double p3 = (1.0 - u) / 2.0;
      out.push_back({pauli(0) * std::sqrt(p0), 0});
      out.push_back({pauli(3) * std::sqrt(p3), 3});
      break;
    }
    case Family::Depol: {
      const double p0 = (1.0 + u) / 2.0;
      const double pk = (1.0 - u) / 6.0;
      out.push_back({pauli(0) * std::sqrt(p0), 0});
      for (int i = 1; i <= 3; ++i) out.push_back({pauli(i) * std::sqrt(pk), i});
      break;
    }
  }
  return out;
}

double KrausSet::completeness_defect() const {
  CMat sum = CMat::zero(4);
  for (const auto& e : operators) sum = sum + e.op.adjoint() * e.op;
  return (sum - CMat::identity(4)).frobenius_norm();
}

KrausSet correlated_kraus(const ChannelSpec& spec, DecayPoint decay) {
  const double u = decay.value;
  KrausSet set;
  const double wu = std::sqrt(1.0 - spec.mu);
  const double wc = std::sqrt(spec.mu);

  const auto single = single_qubit_kraus(spec.family, decay);
  if (wu > 0.0) {
    for (const auto& a : single)
      for (const auto& b : single) {
        set.operators.push_back({kron(a.op, b.op) * wu, a.label, b.label, false});
      }
  }
  if (wc > 0.0) {
    if (spec.family == Family::AD) {
      // Full-memory amplitude damping uses its own two-qubit operators, not a
      // reweighting of the tensor products.
      CMat e00 = CMat::identity(4);
      e00(3, 3) = std::sqrt(u);
      CMat e11 = CMat::zero(4);
      e11(0, 3) = std::sqrt(1.0 - u);
      set.operators.push_back({e00 * wc, 0, 0, true});
      set.operators.push_back({e11 * wc, 1, 1, true});
    } else {
      // E_kk = sqrt(p_k) sigma_k (x) sigma_k
      const double p0 = (1.0 + u) / 2.0;
      const double pk = spec.family == Family::PD ? (1.0 - u) / 2.0 : (1.0 - u) / 6.0;
      for (const auto& a : single) {
        const double prob = a.label == 0 ? p0 : pk;
        CMat ekk = kron(pauli(a.label), pauli(a.label)) * std::sqrt(prob);
        set.operators.push_back({ekk * wc, a.label, a.label, true});
      }
    }
  }
  return set;
}

DensityMatrix apply(const KrausSet& kraus, const DensityMatrix& rho0) {
  if (kraus.completeness_defect() > 1e-10) {
    throw std::invalid_argument("apply: Kraus set violates completeness beyond 1e-10");
  }
  CMat out = CMat::zero(4);
  for (const auto& e : kraus.operators) {
    out = out + e.op * rho0.m * e.op.adjoint();
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix evolved_closed_form(const ChannelSpec& spec, const BellLikeState& s,
                                  DecayPoint decay) {
  const double u = decay.value;
  const double mu = spec.mu;
  const double a2 = s.alpha * s.alpha;
  const double b2 = s.beta * s.beta;
  const double ab = s.alpha * s.beta;
  CMat m(4, 4);
  switch (spec.family) {
    case Family::AD: {
      m(0, 0) = a2 + (1.0 - u) * b2 * (1.0 + u * (mu - 1.0));
      m(1, 1) = m(2, 2) = u * (1.0 - u) * b2 * (1.0 - mu);
      m(3, 3) = u * b2 * (u + mu - u * mu);
      m(0, 3) = m(3, 0) = u * ab * (1.0 - mu) + std::sqrt(u) * ab * mu;
      break;
    }
    case Family::PD: {
      m(0, 0) = a2;
      m(3, 3) = b2;
      m(0, 3) = m(3, 0) = ab * (1.0 - (1.0 - u * u) * (1.0 - mu));
      break;
    }
    case Family::Depol: {
      m(0, 0) = -(1.0 / 9.0) * (2.0 + u) * a2 * (-2.0 + u * (mu - 1.0) - mu) -
                (1.0 / 9.0) * (u - 1.0) * b2 * (1.0 + u * (mu - 1.0) + 2.0 * mu);
      m(1, 1) = m(2, 2) = (1.0 / 9.0) * (-2.0 + u + u * u) * (mu - 1.0);
      m(3, 3) = -(1.0 / 9.0) * (u - 1.0) * a2 * (1.0 + u * (mu - 1.0) + 2.0 * mu) +
                (1.0 / 9.0) * b2 * ((2.0 + u) * (2.0 + u) - (-2.0 + u + u * u) * mu);
      m(0, 3) = m(3, 0) =
          (1.0 / 9.0) * ab * (1.0 - 4.0 * u * (1.0 + u) * (mu - 1.0) + 8.0 * mu);
      break;
    }
  }
  return DensityMatrix(std::move(m));
}

CMat d_rho_d_decay(const ChannelSpec& spec, const BellLikeState& s, DecayPoint decay) {
  const double u = decay.value;
  const double mu = spec.mu;
  const double a2 = s.alpha * s.alpha;
  const double b2 = s.beta * s.beta;
  const double ab = s.alpha * s.beta;
  CMat d(4, 4);
  switch (spec.family) {
    case Family::AD: {
      d(0, 0) = b2 * ((mu - 1.0) * (1.0 - 2.0 * u) - 1.0);
      d(1, 1) = d(2, 2) = b2 * (1.0 - mu) * (1.0 - 2.0 * u);
      d(3, 3) = b2 * (2.0 * u + mu - 2.0 * u * mu);
      d(0, 3) = d(3, 0) = ab * (1.0 - mu) + mu * ab / (2.0 * std::sqrt(u));
      break;
    }
    case Family::PD: {
      d(0, 3) = d(3, 0) = 2.0 * u * ab * (1.0 - mu);
      break;
    }
    case Family::Depol: {
      d(0, 0) = -(a2 / 9.0) * ((mu - 1.0) * (2.0 * u + 2.0) - 2.0 - mu) -
                (b2 / 9.0) * (1.0 + 2.0 * mu + (mu - 1.0) * (2.0 * u - 1.0));
      d(1, 1) = d(2, 2) = (1.0 / 9.0) * (1.0 + 2.0 * u) * (mu - 1.0);
      d(3, 3) = -(a2 / 9.0) * (1.0 + 2.0 * mu + (mu - 1.0) * (2.0 * u - 1.0)) +
                (b2 / 9.0) * (2.0 * (2.0 + u) - (1.0 + 2.0 * u) * mu);
      d(0, 3) = d(3, 0) = (4.0 * ab / 9.0) * (1.0 + 2.0 * u) * (1.0 - mu);
      break;
    }
  }
  return d;
}

}  // namespace qslchan
