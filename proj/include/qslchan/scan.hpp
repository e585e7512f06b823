#pragma once

#include "qslchan/qslt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qslchan {

struct CriticalResult {
  bool exists = false;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

/// AD pure-bound ratio at correlation mu versus the uncorrelated channel:
/// largest root of ratio(mu, P) - ratio(0, P) with speedup (difference < 0)
/// on [root, 1]. exists = false when the advantage never exceeds the depth
/// cutoff anywhere on the grid.
CriticalResult find_p_tau_c(double c, double mu);

/// Smallest C whose AD pure-bound ratio at the given endpoint drops below 1.
CriticalResult find_c_c(double mu, double p_tau);

/// Smallest mu whose Depol pure-bound ratio at the given endpoint drops
/// below 1.
CriticalResult find_mu_critical(double c, double p_tau);

enum class FigureId { fig1a, fig1b, fig2, fig3, fig4, fig5a, fig5b };

FigureId figure_id_from_string(const std::string& name);
std::string to_string(FigureId id);

/// One dataset column per curve; a cell is empty where the quantity is
/// undefined (stationary evolution, nonexistent critical value).
struct FigureDataset {
  std::string x_name;
  std::vector<std::string> curve_names;
  std::vector<double> x;
  std::vector<std::vector<std::optional<double>>> rows;  // rows[i][curve]
};

enum class Exec { serial, parallel };

FigureDataset figure_dataset(FigureId id, Exec exec = Exec::parallel, int points = 200);

}  // namespace qslchan
