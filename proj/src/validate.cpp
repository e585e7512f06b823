#include "qslchan/validate.hpp"

#include "qslchan/output.hpp"
#include "qslchan/qslt.hpp"
#include "qslchan/scan.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>

namespace qslchan {

namespace {

struct Tuple {
  Family family;
  double mu;
  double alpha;
  double decay;
};

std::vector<Tuple> random_tuples(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> open(0.02, 0.999);
  std::vector<Tuple> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Family f = std::array{Family::AD, Family::PD, Family::Depol}[rng() % 3];
    out.push_back({f, unit(rng), unit(rng), open(rng)});
  }
  return out;
}

}  // namespace

bool ValidationReport::all_pass() const {
  for (const auto& l : lines) {
    if (!l.info_only && !l.pass) return false;
  }
  return true;
}

std::string ValidationReport::render() const {
  std::ostringstream s;
  for (const auto& l : lines) {
    const char* tag = l.info_only ? "INFO" : (l.pass ? "PASS" : "FAIL");
    s << tag << "  " << l.name;
    if (!l.detail.empty()) s << "  (" << l.detail << ")";
    s << '\n';
  }
  s << (all_pass() ? "all checks passed\n" : "VALIDATION FAILED\n");
  return s.str();
}

ValidationReport run_validation(const ValidationOptions& opts) {
  ValidationReport rep;
  const auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.lines.push_back({name, pass, false, detail});
  };

  // Kraus sets: completeness, trace preservation, closed-form agreement,
  // mu-linearity, positivity.
  {
    double worst_complete = 0.0, worst_trace = 0.0, worst_closed = 0.0, worst_linear = 0.0;
    double min_eig = 0.0;
    for (const auto& t : random_tuples(200, 20240601)) {
      const ChannelSpec spec(t.family, t.mu);
      const BellLikeState s(t.alpha);
      const DecayPoint u(t.decay);
      KrausSet k = correlated_kraus(spec, u);
      if (opts.inject_kraus_defect && !k.operators.empty()) {
        k.operators.front().op = k.operators.front().op * (1.0 + 1e-3);
      }
      worst_complete = std::max(worst_complete, k.completeness_defect());
      const DensityMatrix rho0 = bell_like_density(s);
      const DensityMatrix closed = evolved_closed_form(spec, s, u);
      try {
        const DensityMatrix out = apply(k, rho0);
        worst_trace = std::max(worst_trace, std::abs(out.m.trace().real() - 1.0));
        min_eig = std::min(min_eig, out.min_eigenvalue());
        worst_closed = std::max(worst_closed, out.m.max_abs_diff(closed.m));
      } catch (const std::exception&) {
        // apply() rejects a defective Kraus set; count it against the checks
        worst_trace = worst_closed = 1.0;
      }
      const DensityMatrix lo = evolved_closed_form(ChannelSpec(t.family, 0.0), s, u);
      const DensityMatrix hi = evolved_closed_form(ChannelSpec(t.family, 1.0), s, u);
      const CMat mix = lo.m * (1.0 - t.mu) + hi.m * t.mu;
      worst_linear = std::max(worst_linear, mix.max_abs_diff(closed.m));
    }
    add("kraus completeness <= 1e-12", worst_complete <= 1e-12,
        "max defect " + format_number(worst_complete));
    add("trace preservation <= 1e-12", worst_trace <= 1e-12,
        "max drift " + format_number(worst_trace));
    add("kraus vs closed form <= 1e-12", worst_closed <= 1e-12,
        "max diff " + format_number(worst_closed));
    add("mu-linearity <= 1e-12", worst_linear <= 1e-12, "max diff " + format_number(worst_linear));
    add("output positivity >= -1e-9", min_eig >= -1e-9, "min eig " + format_number(min_eig));
  }

  // Analytic decay derivative vs central finite differences.
  {
    double worst = 0.0;
    for (const auto& t : random_tuples(60, 987123)) {
      if (t.decay < 0.01 || t.decay > 0.99) continue;
      const ChannelSpec spec(t.family, t.mu);
      const BellLikeState s(t.alpha);
      const double h = 1e-6;
      const CMat fd = (evolved_closed_form(spec, s, DecayPoint(t.decay + h)).m -
                       evolved_closed_form(spec, s, DecayPoint(t.decay - h)).m) *
                      (1.0 / (2.0 * h));
      worst = std::max(worst, fd.max_abs_diff(d_rho_d_decay(spec, s, DecayPoint(t.decay))));
    }
    add("analytic derivative vs finite differences <= 1e-8", worst <= 1e-8,
        "max diff " + format_number(worst));
  }

  // PD pure bound: ratio equals C, independent of mu.
  {
    double worst = 0.0, spread = 0.0;
    for (double c : {0.2, 0.5, 0.9}) {
      const BellLikeState s = state_from_concurrence(c);
      double lo = 2.0, hi = -1.0;
      for (double mu : {0.0, 0.25, 0.5, 0.75}) {
        const double v =
            qslt_pure_ratio({ChannelSpec(Family::PD, mu), s, DecayPoint(0.3)}).value;
        worst = std::max(worst, std::abs(v - c));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      spread = std::max(spread, hi - lo);
    }
    add("dephasing pure ratio equals C (1e-6)", worst <= 1e-6, "max dev " + format_number(worst));
    add("dephasing pure ratio mu-independent (1e-9)", spread <= 1e-9,
        "spread " + format_number(spread));
  }

  // Depolarizing, full correlation: ratio equals sqrt(1 - C^2).
  {
    double worst = 0.0;
    for (double c : {0.1, 0.4, 0.6, 0.9}) {
      const double v = qslt_pure_ratio({ChannelSpec(Family::Depol, 1.0),
                                        state_from_concurrence(c), DecayPoint(0.4)})
                           .value;
      worst = std::max(worst, std::abs(v - std::sqrt(1.0 - c * c)));
    }
    add("depolarizing mu=1 ratio equals sqrt(1-C^2) (1e-6)", worst <= 1e-6,
        "max dev " + format_number(worst));
  }

  // Mixed bound closed form for the dephasing channel.
  {
    double worst = 0.0;
    const double ab = 0.5;  // alpha = beta = sqrt(1/2)
    bool frozen_ok = true;
    for (double tau : {0.0, 0.5, 2.0}) {
      for (double mu : {0.0, 0.3, 1.0}) {
        const MixedBoundQuery q{ChannelSpec(Family::PD, mu), BellLikeState(std::sqrt(0.5)), tau,
                                1.0};
        const QsltResult r = qslt_mixed(q);
        if (mu == 1.0) {
          // the window is frozen at full correlation: stationary, value 0
          frozen_ok = frozen_ok && r.stationary && r.value == 0.0;
          continue;
        }
        const double expect = 2.0 * std::exp(-tau) * ab * (1.0 - mu) + 2.0 * ab * mu;
        worst = std::max(worst, std::abs(r.value - expect));
      }
    }
    add("dephasing mixed bound closed form (1e-4)", worst <= 1e-4 && frozen_ok,
        "max dev " + format_number(worst) +
            (frozen_ok ? "" : "; frozen-window convention violated"));
  }

  // Dataset determinism: serial and parallel execution agree byte for byte.
  {
    const std::string a = to_csv(figure_dataset(FigureId::fig4, Exec::serial, 40));
    const std::string b = to_csv(figure_dataset(FigureId::fig4, Exec::parallel, 40));
    add("dataset determinism (serial == parallel)", a == b);
  }

  // Known model discrepancies, reported as information, never as failures.
  {
    const DensityMatrix r0 = bell_like_density(BellLikeState(1.0));
    const DensityMatrix rt =
        evolved_closed_form(ChannelSpec(Family::Depol, 1.0), BellLikeState(1.0), DecayPoint(0.5));
    std::ostringstream msg;
    msg << "fully correlated depolarizing channel moves the separable state |00>: "
        << "max element change " << format_number(r0.m.max_abs_diff(rt.m))
        << "; the mu=1 ratio formula nevertheless reports no speedup capacity at C=0";
    rep.lines.push_back({"separable-state stationarity under depolarizing mu=1", true, true,
                         msg.str()});
  }

  return rep;
}

}  // namespace qslchan
