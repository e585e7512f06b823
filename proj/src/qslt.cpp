#include "qslchan/qslt.hpp"

#include "qslchan/quadrature.hpp"

#include <cmath>
#include <limits>

namespace qslchan {

namespace {

constexpr double kStationaryTol = 1e-12;

std::array<double, 3> schatten_norms(const CMat& m) {
  const auto sv = singular_values(m);
  double l1 = 0.0, l2 = 0.0;
  for (double s : sv) {
    l1 += s;
    l2 += s * s;
  }
  return {l1, std::sqrt(l2), sv.front()};
}

}  // namespace

QsltResult qslt_pure_ratio(const PureBoundQuery& q, double quad_tol, int quad_depth) {
  const DensityMatrix rho0 = bell_like_density(q.state);
  const DensityMatrix rho_end = evolved_closed_form(q.spec, q.state, q.endpoint);

  QsltResult r;
  r.numerator = bures_sin2(rho0, rho_end);

  // int_0^tau ||drho/dt||_l dt = int_{u_end}^{1} ||drho/du||_l du for the
  // monotone decay path u(t) = exp(-rate t). The AD coherence derivative has
  // an integrable 1/sqrt(u) term, so AD integrates in v = sqrt(u).
  std::array<double, 3> path{};
  if (q.endpoint.value < 1.0) {
    if (q.spec.family == Family::AD) {
      std::function<std::array<double, 3>(double)> f = [&](double v) {
        auto n = schatten_norms(d_rho_d_decay(q.spec, q.state, DecayPoint(v * v)));
        for (double& x : n) x *= 2.0 * v;
        return n;
      };
      path = integrate_simpson<3>(f, std::sqrt(q.endpoint.value), 1.0, quad_tol, quad_depth);
    } else {
      std::function<std::array<double, 3>(double)> f = [&](double u) {
        return schatten_norms(d_rho_d_decay(q.spec, q.state, DecayPoint(u)));
      };
      path = integrate_simpson<3>(f, q.endpoint.value, 1.0, quad_tol, quad_depth);
    }
  }
  r.path_l1 = path[0];
  r.path_l2 = path[1];
  r.path_linf = path[2];
  r.denominator = r.path_linf;

  if (r.numerator < kStationaryTol && r.denominator < kStationaryTol) {
    r.stationary = true;
    r.value = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  // The operator norm is the smallest Schatten norm, so its path integral
  // gives the largest reciprocal term.
  r.value = r.numerator / r.denominator;
  return r;
}

QsltResult qslt_mixed(const MixedBoundQuery& q, double quad_tol, int quad_depth) {
  if (q.tau < 0.0) throw std::domain_error("qslt_mixed: tau must be nonnegative");
  if (!(q.tau_d > 0.0)) throw std::domain_error("qslt_mixed: tau_d must be positive");

  const auto decay_at = [&](double t) { return DecayPoint(std::exp(-q.spec.rate * t)); };
  const DensityMatrix rho_tau = evolved_closed_form(q.spec, q.state, decay_at(q.tau));
  const DensityMatrix rho_end = evolved_closed_form(q.spec, q.state, decay_at(q.tau + q.tau_d));

  const double purity_tau = rho_tau.purity();
  const double f_rel = relative_purity(rho_tau, rho_end);

  QsltResult r;
  r.numerator = std::abs(f_rel - 1.0) * purity_tau;
  if (r.numerator < kStationaryTol) {
    r.stationary = true;
    r.value = 0.0;
    return r;
  }

  auto rho_sv = singular_values(rho_tau.m);  // descending

  // sigma_i(t) of drho/dt = drho/du * du/dt with du/dt = -rate * u(t).
  std::function<std::array<double, 2>(double)> f = [&](double t) {
    const double u = std::exp(-q.spec.rate * t);
    auto sv = singular_values(d_rho_d_decay(q.spec, q.state, DecayPoint(u)));
    const double scale = q.spec.rate * u;
    double dot = 0.0, sq = 0.0;
    for (size_t i = 0; i < sv.size(); ++i) {
      const double s = sv[i] * scale;
      dot += s * rho_sv[i];
      sq += s * s;
    }
    return std::array<double, 2>{dot, std::sqrt(sq)};
  };
  const auto integrals = integrate_simpson<2>(f, q.tau, q.tau + q.tau_d, quad_tol, quad_depth);
  const double avg_dot = integrals[0] / q.tau_d;
  const double avg_sq = integrals[1] / q.tau_d;

  r.denominator = std::min(avg_dot, avg_sq);
  r.value = std::max(1.0 / avg_dot, 1.0 / avg_sq) * r.numerator;
  return r;
}

std::optional<double> oracle_ratio(const ChannelSpec& spec, const BellLikeState& s,
                                   DecayPoint endpoint) {
  (void)endpoint;
  const double c = s.concurrence();
  if (spec.family == Family::PD) return c;
  if (spec.family == Family::Depol && spec.mu == 1.0) return std::sqrt(1.0 - c * c);
  return std::nullopt;
}

}  // namespace qslchan
