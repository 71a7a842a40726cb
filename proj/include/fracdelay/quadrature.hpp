#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fracdelay/errors.hpp"

namespace fracdelay {
namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr double kG15Nodes[15] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
inline constexpr double kG15Weights[15] = {
    0.03075324199611727, 0.07036604748810812, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939,  0.1861610000155622,  0.1984314853271116, 0.2025782419255613,
    0.1984314853271116,  0.1861610000155622,  0.1662692058169939, 0.1395706779261543,
    0.1071592204671719,  0.07036604748810812, 0.03075324199611727};

template <typename F>
double gauss15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 15; ++i) s += kG15Weights[i] * f(mid + half * kG15Nodes[i]);
  return half * s;
}

template <typename F>
double adaptive_gauss_rec(const F& f, double a, double b, double whole, double tol, int depth,
                          double* achieved) {
  const double mid = 0.5 * (a + b);
  const double left = gauss15(f, a, mid);
  const double right = gauss15(f, mid, b);
  const double err = std::abs(left + right - whole);
  if (err <= tol || depth >= 48) {
    *achieved = std::max(*achieved, err);
    if (err > tol && depth >= 48)
      throw convergence_error("adaptive quadrature: bisection depth exhausted", err);
    return left + right;
  }
  return adaptive_gauss_rec(f, a, mid, left, 0.5 * tol, depth + 1, achieved) +
         adaptive_gauss_rec(f, mid, b, right, 0.5 * tol, depth + 1, achieved);
}

}  // namespace detail

// Adaptive composite 15-point Gauss integration of f over [a, b] to absolute
// tolerance abs_tol.  Nodes are strictly interior, so integrable endpoint
// behavior is tolerated as long as the integral itself converges.
template <typename F>
double adaptive_gauss(const F& f, double a, double b, double abs_tol) {
  if (!(b > a)) return 0.0;
  double achieved = 0.0;
  return detail::adaptive_gauss_rec(f, a, b, detail::gauss15(f, a, b), abs_tol, 0, &achieved);
}

// Same, but splits [a, b] at the supplied interior breakpoints first
// (integrand kinks, delay-lattice points).  Tolerance is divided evenly
// across the resulting panels.
template <typename F>
double adaptive_gauss_with_breaks(const F& f, double a, double b, std::vector<double> breaks,
                                  double abs_tol) {
  if (!(b > a)) return 0.0;
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                              [&](double x) { return !(x > a + 1e-15 && x < b - 1e-15); }),
               breaks.end());
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> edges;
  edges.push_back(a);
  for (double x : breaks)
    if (x - edges.back() > 1e-14) edges.push_back(x);
  edges.push_back(b);
  const double panel_tol = abs_tol / static_cast<double>(edges.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    total += adaptive_gauss(f, edges[i], edges[i + 1], panel_tol);
  return total;
}

}  // namespace fracdelay
