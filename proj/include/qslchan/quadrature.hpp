#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace qslchan {

/// Adaptive Simpson integration with deterministic node placement.
/// `N` integrands are evaluated together so a shared function evaluation
/// (e.g. one SVD) can feed several norms; the refinement test uses the
/// worst component.
template <size_t N>
std::array<double, N> integrate_simpson(const std::function<std::array<double, N>(double)>& f,
                                        double a, double b, double abs_tol = 1e-9,
                                        int max_depth = 40);

double integrate_simpson_1(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-9, int max_depth = 40);

}  // namespace qslchan
