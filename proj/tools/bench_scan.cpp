// Compares the serial reference evaluator with the OpenMP grid evaluator on
// the figure datasets and reports throughput.

#include "qslchan/output.hpp"
#include "qslchan/scan.hpp"

#include <chrono>
#include <cstdio>

using namespace qslchan;

namespace {

double time_ms(FigureId id, Exec exec, int points) {
  const auto t0 = std::chrono::steady_clock::now();
  const FigureDataset d = figure_dataset(id, exec, points);
  const auto t1 = std::chrono::steady_clock::now();
  (void)d;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  struct Case {
    FigureId id;
    int points;
  };
  const Case cases[] = {{FigureId::fig1b, 100}, {FigureId::fig3, 100},
                        {FigureId::fig4, 100},  {FigureId::fig5a, 100},
                        {FigureId::fig2, 20}};
  std::printf("%-8s %8s %12s %12s %8s\n", "figure", "points", "serial[ms]", "openmp[ms]",
              "speedup");
  for (const Case& c : cases) {
    const double s = time_ms(c.id, Exec::serial, c.points);
    const double p = time_ms(c.id, Exec::parallel, c.points);
    const std::string name = to_string(c.id);
    std::printf("%-8s %8d %12.1f %12.1f %7.2fx\n", name.c_str(), c.points, s, p, s / p);
    // datasets must agree exactly
    if (to_csv(figure_dataset(c.id, Exec::serial, c.points)) !=
        to_csv(figure_dataset(c.id, Exec::parallel, c.points))) {
      std::printf("MISMATCH between serial and parallel output for %s\n", name.c_str());
      return 1;
    }
  }
  return 0;
}
