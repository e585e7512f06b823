#include "qslchan/output.hpp"
#include "qslchan/qslt.hpp"
#include "qslchan/scan.hpp"
#include "qslchan/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using nlohmann::json;
using namespace qslchan;

namespace {

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

json matrix_json(const CMat& m) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json rre = json::array(), rim = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      rre.push_back(m(i, j).real());
      rim.push_back(m(i, j).imag());
    }
    re.push_back(rre);
    im.push_back(rim);
  }
  return json{{"real", re}, {"imag", im}};
}

std::string matrix_csv(const CMat& m) {
  std::string s = "row,col,real,imag\n";
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      s += std::to_string(i) + "," + std::to_string(j) + "," + format_number(m(i, j).real()) +
           "," + format_number(m(i, j).imag()) + "\n";
    }
  return s;
}

struct StateArgs {
  std::optional<double> alpha;
  std::optional<double> concurrence;

  BellLikeState resolve() const {
    if (alpha && concurrence) {
      throw CLI::ValidationError("state", "--alpha and --concurrence are mutually exclusive");
    }
    if (concurrence) return state_from_concurrence(*concurrence);
    if (alpha) return BellLikeState(*alpha);
    throw CLI::ValidationError("state", "either --alpha or --concurrence is required");
  }
};

json critical_json(const CriticalResult& r) {
  return json{{"exists", r.exists},
              {"value", r.value},
              {"bracket", {r.bracket_lo, r.bracket_hi}},
              {"iterations", r.iterations}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-qubit correlated-channel evolution and quantum speed limit times"};
  app.require_subcommand(1);

  std::string family_name = "ad";
  double mu = 0.0;
  std::optional<double> rate;
  StateArgs state;
  std::string out_path;
  std::string format;

  const auto add_common = [&](CLI::App* cmd, bool with_state) {
    cmd->add_option("--family", family_name, "channel family: ad | pd | depol")
        ->check(CLI::IsMember({"ad", "pd", "depol"}));
    cmd->add_option("--mu", mu, "correlation strength in [0,1]")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--rate", rate, "decay rate (default 1 for ad, 0.5 for pd/depol)");
    if (with_state) {
      cmd->add_option("--alpha", state.alpha, "amplitude of |00> in [0,1]");
      cmd->add_option("--concurrence", state.concurrence,
                      "initial concurrence C in [0,1]; maps to the alpha <= sqrt(2)/2 branch");
    }
    cmd->add_option("--out", out_path, "output path (default: stdout)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  const auto make_spec = [&]() {
    const Family f = family_from_string(family_name);
    return ChannelSpec(f, mu, rate.value_or(default_rate(f)));
  };

  // evolve
  auto* evolve = app.add_subcommand("evolve", "evolve a Bell-like state through the channel");
  double endpoint = 0.5;
  add_common(evolve, true);
  evolve->add_option("--endpoint", endpoint, "decay parameter of the final state, in (0,1]")
      ->required()
      ->check(CLI::Range(1e-300, 1.0));

  // qslt
  auto* qslt_cmd = app.add_subcommand("qslt", "compute a quantum speed limit time");
  std::string bound = "pure";
  std::optional<double> q_endpoint, q_tau, q_tau_d;
  add_common(qslt_cmd, true);
  qslt_cmd->add_option("--bound", bound, "pure | mixed")->check(CLI::IsMember({"pure", "mixed"}));
  qslt_cmd->add_option("--endpoint", q_endpoint, "final decay parameter (pure bound)");
  qslt_cmd->add_option("--tau", q_tau, "window start time (mixed bound)");
  qslt_cmd->add_option("--tau-d", q_tau_d, "driving time (mixed bound)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "critical-parameter searches");
  std::string critical;
  std::optional<double> s_c, s_mu, s_p_tau;
  scan_cmd->add_option("--critical", critical, "p_tau_c | c_c | mu_critical")
      ->required()
      ->check(CLI::IsMember({"p_tau_c", "c_c", "mu_critical"}));
  scan_cmd->add_option("--c", s_c, "initial concurrence");
  scan_cmd->add_option("--mu", s_mu, "correlation strength");
  scan_cmd->add_option("--p-tau", s_p_tau, "final decay parameter");
  scan_cmd->add_option("--out", out_path, "output path (default: stdout)");
  scan_cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));

  // figure
  auto* figure_cmd = app.add_subcommand("figure", "generate a figure dataset");
  std::string figure_name;
  int points = 200;
  bool serial = false;
  figure_cmd->add_option("id", figure_name, "fig1a|fig1b|fig2|fig3|fig4|fig5a|fig5b")->required();
  figure_cmd->add_option("--points", points, "grid points per swept axis (default 200)")
      ->check(CLI::PositiveNumber);
  figure_cmd->add_flag("--serial", serial, "use the serial reference evaluator");
  figure_cmd->add_option("--out", out_path, "output path (default: stdout)");
  figure_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "svg"}));

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "run the self-validation suite");
  ValidationOptions vopts;
  validate_cmd->add_flag("--inject-kraus-defect", vopts.inject_kraus_defect)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*evolve) {
      const ChannelSpec spec = make_spec();
      const BellLikeState s = state.resolve();
      const DecayPoint u(endpoint);
      const DensityMatrix closed = evolved_closed_form(spec, s, u);
      const DensityMatrix via_kraus = apply(correlated_kraus(spec, u), bell_like_density(s));
      const double discrepancy = closed.m.max_abs_diff(via_kraus.m);
      if (format == "csv") {
        std::string body = matrix_csv(closed.m);
        body += "trace," + format_number(closed.m.trace().real()) + ",,\n";
        body += "min_eigenvalue," + format_number(closed.min_eigenvalue()) + ",,\n";
        body += "kraus_discrepancy," + format_number(discrepancy) + ",,\n";
        write_out(out_path, body);
      } else {
        json j{{"matrix", matrix_json(closed.m)},
               {"trace", closed.m.trace().real()},
               {"min_eigenvalue", closed.min_eigenvalue()},
               {"kraus_discrepancy", discrepancy}};
        write_out(out_path, j.dump(2) + "\n");
      }
    } else if (*qslt_cmd) {
      const ChannelSpec spec = make_spec();
      const BellLikeState s = state.resolve();
      QsltResult r;
      if (bound == "pure") {
        if (!q_endpoint) throw CLI::ValidationError("qslt", "--bound pure requires --endpoint");
        r = qslt_pure_ratio({spec, s, DecayPoint(*q_endpoint)});
      } else {
        if (!q_tau || !q_tau_d) {
          throw CLI::ValidationError("qslt", "--bound mixed requires --tau and --tau-d");
        }
        r = qslt_mixed({spec, s, *q_tau, *q_tau_d});
      }
      json j{{"bound", bound},
             {"numerator", r.numerator},
             {"denominator", r.denominator},
             {"stationary", r.stationary}};
      if (r.stationary && bound == "pure") j["value"] = nullptr;
      else j["value"] = r.value;
      if (bound == "pure") {
        j["path_l1"] = r.path_l1;
        j["path_l2"] = r.path_l2;
        j["path_linf"] = r.path_linf;
        if (auto oracle = oracle_ratio(spec, s, DecayPoint(*q_endpoint))) {
          j["oracle_value"] = *oracle;
        }
      }
      write_out(out_path, j.dump(2) + "\n");
    } else if (*scan_cmd) {
      CriticalResult r;
      std::string what = critical;
      if (critical == "p_tau_c") {
        if (!s_c || !s_mu) throw CLI::ValidationError("scan", "p_tau_c requires --c and --mu");
        r = find_p_tau_c(*s_c, *s_mu);
      } else if (critical == "c_c") {
        if (!s_mu || !s_p_tau) throw CLI::ValidationError("scan", "c_c requires --mu and --p-tau");
        r = find_c_c(*s_mu, *s_p_tau);
      } else {
        if (!s_c || !s_p_tau) {
          throw CLI::ValidationError("scan", "mu_critical requires --c and --p-tau");
        }
        r = find_mu_critical(*s_c, *s_p_tau);
      }
      if (format == "csv") {
        std::string body = "critical,exists,value,bracket_lo,bracket_hi,iterations\n";
        body += what + "," + (r.exists ? "true" : "false") + "," +
                (r.exists ? format_number(r.value) : "") + "," + format_number(r.bracket_lo) +
                "," + format_number(r.bracket_hi) + "," + std::to_string(r.iterations) + "\n";
        write_out(out_path, body);
      } else {
        json j = critical_json(r);
        j["critical"] = what;
        write_out(out_path, j.dump(2) + "\n");
      }
    } else if (*figure_cmd) {
      const FigureId id = figure_id_from_string(figure_name);
      const FigureDataset d =
          figure_dataset(id, serial ? Exec::serial : Exec::parallel, points);
      if (format == "svg") {
        write_out(out_path, to_svg(d, to_string(id)));
      } else {
        write_out(out_path, to_csv(d));
      }
    } else if (*validate_cmd) {
      const ValidationReport rep = run_validation(vopts);
      std::cout << rep.render();
      return rep.all_pass() ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
