#include "qslchan/quadrature.hpp"

#include <cmath>

namespace qslchan {

namespace {

template <size_t N>
using Vec = std::array<double, N>;

template <size_t N>
Vec<N> simpson(const Vec<N>& fa, const Vec<N>& fm, const Vec<N>& fb, double h) {
  Vec<N> s;
  for (size_t i = 0; i < N; ++i) s[i] = (h / 6.0) * (fa[i] + 4.0 * fm[i] + fb[i]);
  return s;
}

template <size_t N>
Vec<N> recurse(const std::function<Vec<N>(double)>& f, double a, double b, const Vec<N>& fa,
               const Vec<N>& fm, const Vec<N>& fb, const Vec<N>& whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const Vec<N> fl = f(0.5 * (a + m));
  const Vec<N> fr = f(0.5 * (m + b));
  const Vec<N> left = simpson<N>(fa, fl, fm, m - a);
  const Vec<N> right = simpson<N>(fm, fr, fb, b - m);
  double err = 0.0;
  Vec<N> sum;
  for (size_t i = 0; i < N; ++i) {
    sum[i] = left[i] + right[i];
    err = std::max(err, std::abs(sum[i] - whole[i]));
  }
  if (depth <= 0 || err < 15.0 * tol) {
    for (size_t i = 0; i < N; ++i) sum[i] += (sum[i] - whole[i]) / 15.0;
    return sum;
  }
  const Vec<N> l = recurse<N>(f, a, m, fa, fl, fm, left, tol / 2.0, depth - 1);
  const Vec<N> r = recurse<N>(f, m, b, fm, fr, fb, right, tol / 2.0, depth - 1);
  for (size_t i = 0; i < N; ++i) sum[i] = l[i] + r[i];
  return sum;
}

}  // namespace

template <size_t N>
std::array<double, N> integrate_simpson(const std::function<std::array<double, N>(double)>& f,
                                        double a, double b, double abs_tol, int max_depth) {
  if (a == b) return Vec<N>{};
  const Vec<N> fa = f(a);
  const Vec<N> fm = f(0.5 * (a + b));
  const Vec<N> fb = f(b);
  const Vec<N> whole = simpson<N>(fa, fm, fb, b - a);
  return recurse<N>(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

template std::array<double, 1> integrate_simpson<1>(
    const std::function<std::array<double, 1>(double)>&, double, double, double, int);
template std::array<double, 2> integrate_simpson<2>(
    const std::function<std::array<double, 2>(double)>&, double, double, double, int);
template std::array<double, 3> integrate_simpson<3>(
    const std::function<std::array<double, 3>(double)>&, double, double, double, int);

double integrate_simpson_1(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_depth) {
  return integrate_simpson<1>([&f](double x) { return std::array<double, 1>{f(x)}; }, a, b,
                              abs_tol, max_depth)[0];
}

}  // namespace qslchan
