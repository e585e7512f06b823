#include "qslchan/scan.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace qslchan {

namespace {

constexpr double kBisectWidth = 1e-6;
// Classification thresholds. The pure-bound ratio leaves 1 tangentially
// (quadratically in the swept parameter), so the crossover searches use a
// tight threshold and the mu-advantage search uses a minimum-depth cutoff;
// with a looser threshold the located values are threshold artifacts.
constexpr double kSpeedupEps = 1e-6;
constexpr double kCrossoverEps = 1e-8;
constexpr double kAdvantageDepth = 5e-4;

double pure_ratio(Family f, double mu, double alpha, double endpoint) {
  const PureBoundQuery q{ChannelSpec(f, mu), BellLikeState(alpha), DecayPoint(endpoint)};
  return qslt_pure_ratio(q).value;
}

double ratio_from_c(Family f, double mu, double c, double endpoint) {
  return pure_ratio(f, mu, state_from_concurrence(c).alpha, endpoint);
}

/// P_tau_c for several mu at one C, sharing the mu = 0 ratio evaluations.
std::vector<CriticalResult> p_tau_c_multi(double c, const std::vector<double>& mus) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("find_p_tau_c: C must lie in (0,1)");
  const double alpha = state_from_concurrence(c).alpha;
  std::map<double, double> base;  // P -> ratio(mu = 0, P)
  const auto ratio0 = [&](double p) {
    auto it = base.find(p);
    if (it != base.end()) return it->second;
    const double v = pure_ratio(Family::AD, 0.0, alpha, p);
    base.emplace(p, v);
    return v;
  };

  std::vector<CriticalResult> out;
  for (double mu : mus) {
    if (!(mu > 0.0 && mu <= 1.0)) throw std::domain_error("find_p_tau_c: mu must lie in (0,1]");
    const auto h = [&](double p) { return pure_ratio(Family::AD, mu, alpha, p) - ratio0(p); };

    const int n = 99;
    std::vector<double> grid(n), hv(n);
    for (int i = 0; i < n; ++i) {
      grid[i] = 0.01 * (i + 1);
      hv[i] = h(grid[i]);
    }
    CriticalResult r;
    if (*std::min_element(hv.begin(), hv.end()) > -kAdvantageDepth) {
      out.push_back(r);
      continue;
    }
    int idx = -1;
    for (int i = 0; i + 1 < n; ++i) {
      if (hv[i] >= 0.0 && hv[i + 1] < 0.0) idx = i;
    }
    if (idx < 0) {
      // advantage over the whole grid
      r.exists = true;
      r.value = grid.front();
      r.bracket_lo = 0.0;
      r.bracket_hi = grid.front();
      out.push_back(r);
      continue;
    }
    double lo = grid[idx], hi = grid[idx + 1];
    int iters = 0;
    while (hi - lo > kBisectWidth) {
      const double mid = 0.5 * (lo + hi);
      if (h(mid) >= 0.0) lo = mid;
      else hi = mid;
      ++iters;
    }
    r.exists = true;
    r.value = 0.5 * (lo + hi);
    r.bracket_lo = lo;
    r.bracket_hi = hi;
    r.iterations = iters;
    out.push_back(r);
  }
  return out;
}

/// Coarse scan + bisection for the smallest x in [0, x_max] where g(x) drops
/// below the threshold. g must be >= threshold at the left edge or the left
/// edge itself is returned.
CriticalResult ascend_crossover(const std::function<double(double)>& g, double threshold,
                                double x_max) {
  const double step = 0.01;
  double prev = 0.0;
  double prev_g = g(0.0);
  if (prev_g < threshold) {
    CriticalResult r;
    r.exists = true;
    return r;  // already below threshold at the left edge
  }
  double first = -1.0;
  for (double x = step; x <= x_max + 1e-12; x += step) {
    const double gx = g(x);
    if (gx < threshold) {
      first = x;
      break;
    }
    prev = x;
    prev_g = gx;
  }
  CriticalResult r;
  if (first < 0.0) return r;
  double lo = prev, hi = first;
  int iters = 0;
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= threshold) lo = mid;
    else hi = mid;
    ++iters;
  }
  r.exists = true;
  r.value = 0.5 * (lo + hi);
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.iterations = iters;
  return r;
}

}  // namespace

CriticalResult find_p_tau_c(double c, double mu) { return p_tau_c_multi(c, {mu}).front(); }

CriticalResult find_c_c(double mu, double p_tau) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::domain_error("find_c_c: mu must lie in [0,1]");
  if (!(p_tau > 0.0 && p_tau < 1.0)) throw std::domain_error("find_c_c: p_tau must lie in (0,1)");
  return ascend_crossover([&](double c) { return ratio_from_c(Family::AD, mu, c, p_tau); },
                          1.0 - kCrossoverEps, 0.99);
}

CriticalResult find_mu_critical(double c, double p_tau) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("find_mu_critical: C must lie in (0,1)");
  if (!(p_tau > 0.0 && p_tau < 1.0)) {
    throw std::domain_error("find_mu_critical: p_tau must lie in (0,1)");
  }
  return ascend_crossover([&](double mu) { return ratio_from_c(Family::Depol, mu, c, p_tau); },
                          1.0 - kSpeedupEps, 1.0);
}

FigureId figure_id_from_string(const std::string& name) {
  if (name == "fig1a") return FigureId::fig1a;
  if (name == "fig1b") return FigureId::fig1b;
  if (name == "fig2") return FigureId::fig2;
  if (name == "fig3") return FigureId::fig3;
  if (name == "fig4") return FigureId::fig4;
  if (name == "fig5a") return FigureId::fig5a;
  if (name == "fig5b") return FigureId::fig5b;
  throw std::invalid_argument("unknown figure id: " + name);
}

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::fig1a: return "fig1a";
    case FigureId::fig1b: return "fig1b";
    case FigureId::fig2: return "fig2";
    case FigureId::fig3: return "fig3";
    case FigureId::fig4: return "fig4";
    case FigureId::fig5a: return "fig5a";
    case FigureId::fig5b: return "fig5b";
  }
  return "?";
}

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

std::string short_num(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::optional<double> ratio_cell(Family f, double mu, double alpha, double endpoint) {
  const PureBoundQuery q{ChannelSpec(f, mu), BellLikeState(alpha), DecayPoint(endpoint)};
  const QsltResult r = qslt_pure_ratio(q);
  if (r.stationary) return std::nullopt;
  return r.value;
}

}  // namespace

FigureDataset figure_dataset(FigureId id, Exec exec, int points) {
  static const std::vector<double> kMus = {0.0, 0.3, 0.6, 1.0};
  static const std::vector<double> kCs = {0.2, 0.4, 0.6, 0.8};
  const double sqrt_half = std::sqrt(0.5);

  FigureDataset d;
  switch (id) {
    case FigureId::fig1a:
    case FigureId::fig1b:
      d.x_name = "p_tau";
      d.x = linspace(0.005, 1.0, points);
      for (double mu : kMus) d.curve_names.push_back("mu_" + short_num(mu));
      break;
    case FigureId::fig2:
      d.x_name = "concurrence";
      d.x = linspace(0.005, 0.995, points);
      d.curve_names = {"mu_0.3", "mu_0.6", "mu_1"};
      break;
    case FigureId::fig3:
    case FigureId::fig5a:
      d.x_name = "concurrence";
      d.x = linspace(0.005, 0.995, points);
      for (double mu : kMus) d.curve_names.push_back("mu_" + short_num(mu));
      break;
    case FigureId::fig4:
      d.x_name = "tau";
      d.x = linspace(0.0, 5.0, points);
      for (double mu : kMus) d.curve_names.push_back("mu_" + short_num(mu));
      break;
    case FigureId::fig5b:
      d.x_name = "mu";
      d.x = linspace(0.0, 1.0, points);
      for (double c : kCs) d.curve_names.push_back("C_" + short_num(c));
      break;
  }
  const int n = static_cast<int>(d.x.size());
  d.rows.assign(n, std::vector<std::optional<double>>(d.curve_names.size()));

  // One row is an independent unit of work; rows land in preallocated slots
  // so serial and parallel execution produce identical datasets.
  const auto row_job = [&](int i) {
    const double x = d.x[i];
    auto& row = d.rows[i];
    switch (id) {
      case FigureId::fig1a:
      case FigureId::fig1b: {
        const double alpha = id == FigureId::fig1a ? 0.0 : sqrt_half;
        for (size_t k = 0; k < kMus.size(); ++k) {
          row[k] = ratio_cell(Family::AD, kMus[k], alpha, x);
        }
        break;
      }
      case FigureId::fig2: {
        const auto res = p_tau_c_multi(x, {0.3, 0.6, 1.0});
        for (size_t k = 0; k < res.size(); ++k) {
          if (res[k].exists) row[k] = res[k].value;
        }
        break;
      }
      case FigureId::fig3: {
        const double alpha = state_from_concurrence(x).alpha;
        for (size_t k = 0; k < kMus.size(); ++k) {
          row[k] = ratio_cell(Family::AD, kMus[k], alpha, 0.5);
        }
        break;
      }
      case FigureId::fig4: {
        for (size_t k = 0; k < kMus.size(); ++k) {
          const MixedBoundQuery q{ChannelSpec(Family::PD, kMus[k]), BellLikeState(sqrt_half), x,
                                  1.0};
          row[k] = qslt_mixed(q).value;
        }
        break;
      }
      case FigureId::fig5a: {
        const double alpha = state_from_concurrence(x).alpha;
        for (size_t k = 0; k < kMus.size(); ++k) {
          row[k] = ratio_cell(Family::Depol, kMus[k], alpha, 0.5);
        }
        break;
      }
      case FigureId::fig5b: {
        for (size_t k = 0; k < kCs.size(); ++k) {
          row[k] = ratio_cell(Family::Depol, x, state_from_concurrence(kCs[k]).alpha, 0.5);
        }
        break;
      }
    }
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) row_job(i);
  } else {
    for (int i = 0; i < n; ++i) row_job(i);
  }
  return d;
}

}  // namespace qslchan
